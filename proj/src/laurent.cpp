#include "qhowe/laurent.hpp"

#include <cassert>
#include <map>
#include <sstream>

namespace qhowe {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string to_string(const GaussianRational& g) {
    if (g.im == 0) return to_string(g.re);
    return to_string(g.re) + "+" + to_string(g.im) + "i";
}

LaurentPoly LaurentPoly::operator-() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back({e, -c});
    return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first < o.terms_[j].first) {
            out.push_back(terms_[i++]);
        } else if (terms_[i].first > o.terms_[j].first) {
            out.push_back(o.terms_[j++]);
        } else {
            push_term(out, terms_[i].first, terms_[i].second + o.terms_[j].second);
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.is_unit()) return shifted(o.terms_[0].first).scaled(o.terms_[0].second);
    if (is_unit()) return o.shifted(terms_[0].first).scaled(terms_[0].second);
    std::map<int, GaussianRational> acc;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) acc[ea + eb] += ca * cb;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) push_term(out, e, c);
    return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back({e + dexp, c});
    return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& s) const {
    if (s.is_zero()) return {};
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back({e, c * s});
    return from_terms(std::move(out));
}

GaussianRational LaurentPoly::eval_at_one() const {
    GaussianRational acc;
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
}

GaussianRational LaurentPoly::coeff(int exp) const {
    for (const auto& [e, c] : terms_)
        if (e == exp) return c;
    return {};
}

namespace {

// Dense ordinary-polynomial view used only by gcd/division.
using Dense = std::vector<GaussianRational>;

Dense to_dense(const LaurentPoly& p, int shift) {
    Dense d(static_cast<std::size_t>(p.max_exp() + shift) + 1);
    for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e + shift)] = c;
    return d;
}

void trim(Dense& d) {
    while (!d.empty() && d.back().is_zero()) d.pop_back();
}

// Remainder of a by b, coefficients over Q(i); b nonzero.
Dense dense_rem(Dense a, const Dense& b) {
    GaussianRational lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        GaussianRational f = a.back() * lead_inv;
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

LaurentPoly from_dense(const Dense& d) {
    std::vector<LaurentPoly::Term> out;
    for (std::size_t i = 0; i < d.size(); ++i) LaurentPoly::push_term(out, static_cast<int>(i), d[i]);
    return LaurentPoly::from_terms(std::move(out));
}

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        const LaurentPoly& p = a.is_zero() ? b : a;
        // gcd with zero: p normalized to lowest coefficient 1 at exponent 0
        return p.shifted(-p.min_exp()).scaled(p.terms().front().second.inverse());
    }
    if (a.is_unit() || b.is_unit()) return LaurentPoly(1);
    Dense x = to_dense(a, -a.min_exp());
    Dense y = to_dense(b, -b.min_exp());
    // strip any common v-power from the shifted polys (constant terms may be 0)
    auto strip = [](Dense& d) {
        std::size_t k = 0;
        while (k < d.size() && d[k].is_zero()) ++k;
        d.erase(d.begin(), d.begin() + static_cast<long>(k));
    };
    strip(x);
    strip(y);
    while (!y.empty()) {
        Dense r = dense_rem(std::move(x), y);
        strip(r);
        x = std::move(y);
        y = std::move(r);
        // keep coefficients tame
        if (!y.empty()) {
            GaussianRational inv = y.back().inverse();
            for (auto& c : y) c *= inv;
        }
    }
    LaurentPoly g = from_dense(x);
    if (g.is_zero()) return g;
    return g.shifted(-g.min_exp()).scaled(g.terms().front().second.inverse());
}

LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    assert(!b.is_zero());
    if (a.is_zero()) return {};
    if (b.is_unit()) return a.shifted(-b.min_exp()).scaled(b.terms().front().second.inverse());
    Dense x = to_dense(a, -a.min_exp());
    Dense y = to_dense(b, -b.min_exp());
    auto strip_count = [](Dense& d) {
        std::size_t k = 0;
        while (k < d.size() && d[k].is_zero()) ++k;
        d.erase(d.begin(), d.begin() + static_cast<long>(k));
        return k;
    };
    std::size_t sx = strip_count(x);
    std::size_t sy = strip_count(y);
    Dense quo(x.size() >= y.size() ? x.size() - y.size() + 1 : 0);
    GaussianRational lead_inv = y.back().inverse();
    while (x.size() >= y.size()) {
        GaussianRational f = x.back() * lead_inv;
        std::size_t off = x.size() - y.size();
        quo[off] = f;
        for (std::size_t i = 0; i < y.size(); ++i) x[off + i] -= f * y[i];
        x.pop_back();
        trim(x);
        if (x.empty()) break;
    }
    assert(x.empty() && "laurent_div_exact: not divisible");
    LaurentPoly q = from_dense(quo);
    int shift = a.min_exp() + static_cast<int>(sx) - (b.min_exp() + static_cast<int>(sy));
    return q.shifted(shift);
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0*v^0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out += "+";
        first = false;
        out += to_string(c) + "*v^" + std::to_string(e);
    }
    return out;
}

} // namespace qhowe
