#include "qhowe/scalar.hpp"

#include <cassert>
#include <cstdlib>

namespace qhowe {

Scalar::Scalar(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw std::invalid_argument("Scalar: zero denominator");
    if (num.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(1);
        return;
    }
    if (den.is_unit()) {
        num_ = num.shifted(-den.min_exp()).scaled(den.terms().front().second.inverse());
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly g = laurent_gcd(num, den);
    if (!g.is_one() && !g.is_zero()) {
        num = laurent_div_exact(num, g);
        den = laurent_div_exact(den, g);
    }
    // den normalized: lowest exponent 0, lowest coefficient 1
    int sh = den.min_exp();
    GaussianRational low = den.terms().front().second;
    den_ = den.shifted(-sh).scaled(low.inverse());
    num_ = num.shifted(-sh).scaled(low.inverse());
    if (den_.is_unit()) {
        num_ = num_.shifted(-den_.min_exp()).scaled(den_.terms().front().second.inverse());
        den_ = LaurentPoly(1);
    }
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) {
        Scalar r;
        r.num_ = num_ + o.num_;
        r.den_ = LaurentPoly(1);
        return r;
    }
    if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    if (den_.is_one() && o.den_.is_one()) {
        Scalar r;
        r.num_ = num_ * o.num_;
        r.den_ = LaurentPoly(1);
        return r;
    }
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("Scalar: inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

GaussianRational Scalar::eval_at_one() const {
    GaussianRational d = den_.eval_at_one();
    if (d.is_zero()) throw PoleAtOne("denominator vanishes at v=1: " + to_string(*this));
    return num_.eval_at_one() / d;
}

LaurentPoly quantum_int(int m) {
    assert(m >= 0);
    std::vector<LaurentPoly::Term> t;
    for (int k = 0; k < m; ++k) t.push_back({2 * (m - 1 - 2 * k), GaussianRational(1)});
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return LaurentPoly::from_terms(std::move(t));
}

LaurentPoly q_factorial(int m) {
    LaurentPoly acc(1);
    for (int k = 2; k <= m; ++k) acc *= quantum_int(k);
    return acc;
}

std::pair<LaurentPoly, Scalar> q_factorial_binomial(int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("q_factorial_binomial: need 0 <= k <= m");
    LaurentPoly fact = q_factorial(m);
    Scalar binom(fact, q_factorial(k) * q_factorial(m - k));
    return {fact, binom};
}

LaurentPoly q_binomial(int m, int k) {
    Scalar b = q_factorial_binomial(m, k).second;
    assert(b.is_polynomial());
    return b.num();
}

Scalar q_sub(int parity) {
    return parity == 0 ? Scalar::q_power(1)
                       : Scalar(LaurentPoly::monomial(-2, GaussianRational(-1)));
}

Scalar q_sub_power(int parity, long e) {
    if (parity == 0) return Scalar(LaurentPoly::monomial(static_cast<int>(2 * e)));
    GaussianRational sign((e % 2 == 0) ? 1 : -1);
    return Scalar(LaurentPoly::monomial(static_cast<int>(-2 * e), sign));
}

Scalar bq(const std::vector<long>& mu, const std::vector<long>& nu, const std::vector<int>& eps) {
    if (mu.size() != nu.size() || mu.size() != eps.size())
        throw std::invalid_argument("bq: length mismatch");
    long vexp = 0;
    long sign = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        long p = mu[i] * nu[i];
        if (eps[i] == 0) {
            vexp += 2 * p;
        } else {
            vexp -= 2 * p;
            sign += p;
        }
    }
    GaussianRational c((sign % 2 == 0) ? 1 : -1);
    return Scalar(LaurentPoly::monomial(static_cast<int>(vexp), c));
}

// ---------------------------------------------------------------------------
// report grammar printing / parsing

std::string to_string(const Scalar& s) {
    if (s.is_polynomial()) return to_string(s.num());
    return "(" + to_string(s.num()) + ")/(" + to_string(s.den()) + ")";
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) throw ParseError("expected '" + std::string(1, c) + "' at " + std::to_string(pos) + " in " + s);
    }
};

Rational parse_rat(Cursor& cur) {
    std::size_t start = cur.pos;
    if (cur.peek() == '-' || cur.peek() == '+') ++cur.pos;
    std::size_t digits = 0;
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        ++cur.pos;
        ++digits;
    }
    if (cur.consume('/')) {
        while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
    }
    if (digits == 0) throw ParseError("expected rational at " + std::to_string(start) + " in " + cur.s);
    Rational r(cur.s.substr(start, cur.pos - start));
    r.canonicalize();
    return r;
}

int parse_int(Cursor& cur) {
    std::size_t start = cur.pos;
    if (cur.peek() == '-' || cur.peek() == '+') ++cur.pos;
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
    if (cur.pos == start) throw ParseError("expected integer in " + cur.s);
    return std::atoi(cur.s.substr(start, cur.pos - start).c_str());
}

LaurentPoly parse_poly(Cursor& cur) {
    LaurentPoly acc;
    while (true) {
        Rational re = parse_rat(cur);
        Rational im(0);
        if (cur.peek() == '+') {
            std::size_t save = cur.pos;
            ++cur.pos;
            bool ok = false;
            try {
                Rational r2 = parse_rat(cur);
                if (cur.consume('i')) {
                    im = r2;
                    ok = true;
                }
            } catch (const ParseError&) {
            }
            if (!ok) cur.pos = save; // the '+' separated two terms
        }
        cur.expect('*');
        cur.expect('v');
        cur.expect('^');
        int e = parse_int(cur);
        acc += LaurentPoly::monomial(e, GaussianRational(re, im));
        if (!cur.consume('+')) break;
    }
    return acc;
}

} // namespace

LaurentPoly parse_laurent(const std::string& text) {
    Cursor cur{text};
    LaurentPoly p = parse_poly(cur);
    if (!cur.eof()) throw ParseError("trailing characters in " + text);
    return p;
}

Scalar parse_scalar(const std::string& text) {
    Cursor cur{text};
    if (cur.consume('(')) {
        LaurentPoly num = parse_poly(cur);
        cur.expect(')');
        cur.expect('/');
        cur.expect('(');
        LaurentPoly den = parse_poly(cur);
        cur.expect(')');
        if (!cur.eof()) throw ParseError("trailing characters in " + text);
        return Scalar(num, den);
    }
    LaurentPoly p = parse_poly(cur);
    if (!cur.eof()) throw ParseError("trailing characters in " + text);
    return Scalar(p);
}

} // namespace qhowe
