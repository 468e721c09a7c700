#include "qhowe/combinatorics.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace qhowe {

Epsilon::Epsilon(std::vector<int> b) : bits(std::move(b)) {
    if (bits.size() < 4) throw std::invalid_argument("Epsilon: need n >= 4");
    for (int x : bits)
        if (x != 0 && x != 1) throw std::invalid_argument("Epsilon: entries must be 0/1");
}

Epsilon Epsilon::parse(const std::string& s) {
    std::vector<int> b;
    for (char c : s) {
        if (c == '0')
            b.push_back(0);
        else if (c == '1')
            b.push_back(1);
        else
            throw std::invalid_argument("Epsilon: bad character in \"" + s + "\"");
    }
    return Epsilon(std::move(b));
}

int Epsilon::n0() const { return static_cast<int>(std::count(bits.begin(), bits.end(), 0)); }
int Epsilon::n1() const { return static_cast<int>(std::count(bits.begin(), bits.end(), 1)); }

std::string Epsilon::str() const {
    std::string s;
    for (int b : bits) s += static_cast<char>('0' + b);
    return s;
}

Weight Weight::delta(int n, int i) {
    Weight w = zero(n);
    w.m[static_cast<std::size_t>(i - 1)] = 1;
    return w;
}

std::vector<long> alpha_vector(int n, int i, char X) {
    std::vector<long> v(static_cast<std::size_t>(n), 0);
    if (i == 0) {
        if (X == 'D') {
            v[0] = -1;
            v[1] = -1;
        } else {
            v[0] = -2;
        }
    } else {
        v[static_cast<std::size_t>(i - 1)] = 1;
        v[static_cast<std::size_t>(i)] = -1;
    }
    return v;
}

Weight Weight::alpha(int n, int i, char X) { return Weight(0, alpha_vector(n, i, X)); }

Weight Weight::operator+(const Weight& o) const {
    assert(m.size() == o.m.size());
    Weight r(s + o.s, m);
    for (std::size_t i = 0; i < m.size(); ++i) r.m[i] += o.m[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    assert(m.size() == o.m.size());
    Weight r(s - o.s, m);
    for (std::size_t i = 0; i < m.size(); ++i) r.m[i] -= o.m[i];
    return r;
}

long Weight::degree() const { return std::accumulate(m.begin(), m.end(), 0L); }

std::string Weight::str() const {
    std::string out = "s=" + std::to_string(s) + ";m=";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(m[i]);
    }
    return out;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) throw std::invalid_argument("Partition: not weakly decreasing");
    if (!parts.empty() && parts.back() < 0) throw std::invalid_argument("Partition: negative part");
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int col = 1; col <= part(1); ++col) {
        int len = 0;
        for (int p : parts)
            if (p >= col) ++len;
        c.push_back(len);
    }
    return Partition(std::move(c));
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

namespace {

void gen_partitions(int d, int maxPart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (d == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(d, maxPart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(d - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(d, d == 0 ? 1 : d, cur, out);
    return out;
}

std::string GroupSpec::str() const {
    return family == GroupFamily::O ? "O_" + std::to_string(ell) : "Sp_" + std::to_string(2 * ell);
}

bool in_PG(const Partition& lam, const GroupSpec& G) {
    if (G.family == GroupFamily::Sp) return lam.length() <= G.ell;
    Partition c = lam.conjugate();
    return c.part(1) + c.part(2) <= G.ell;
}

bool hook_condition(const Partition& lam, const Epsilon& eps) {
    return lam.part(eps.n0() + 1) <= eps.n1();
}

bool in_PG_eps(const Partition& lam, const GroupSpec& G, const Epsilon& eps) {
    return in_PG(lam, G) && hook_condition(lam, eps);
}

std::vector<long> omega_lambda(const Partition& lam, const Epsilon& eps) {
    std::vector<int> residual = lam.parts;
    std::vector<long> omega;
    for (int i = 1; i <= eps.n(); ++i) {
        if (eps.at(i) == 0) {
            // take first-row length, delete first row
            omega.push_back(residual.empty() ? 0 : residual.front());
            if (!residual.empty()) residual.erase(residual.begin());
        } else {
            // take first-column length, delete first column
            omega.push_back(static_cast<long>(residual.size()));
            for (auto& p : residual) --p;
            while (!residual.empty() && residual.back() == 0) residual.pop_back();
        }
    }
    if (!residual.empty())
        throw ShapeNotExhausted("omega_lambda: boxes remain for " + lam.str() + ", eps=" + eps.str());
    return omega;
}

Weight lambda_weight(const Partition& lam, const Epsilon& eps, const GroupSpec& G) {
    std::vector<long> omega = omega_lambda(lam, eps);
    long s = G.family == GroupFamily::O ? G.ell : 2L * G.ell;
    return Weight(s, std::move(omega));
}

Partition associated_partition(const Partition& lam, int ell) {
    Partition c = lam.conjugate();
    std::vector<int> cc = c.parts;
    int first = c.part(1);
    assert(first + c.part(2) <= ell);
    if (cc.empty())
        cc.push_back(ell - first);
    else
        cc[0] = ell - first;
    std::sort(cc.begin(), cc.end(), std::greater<int>());
    return Partition(std::move(cc)).conjugate();
}

bool o_split_case(const Partition& lam, int ell) {
    return ell % 2 == 0 && lam.length() == ell / 2;
}

namespace {

// Type C_l:  dim = prod_{i<j} (l_i^2 - l_j^2)/(r_i^2 - r_j^2) * prod_i l_i/r_i,
// l_i = lambda_i + l - i + 1 applied with rho = (l, l-1, ..., 1).
Rational dim_sp(const Partition& lam, int ell) {
    std::vector<long> l(static_cast<std::size_t>(ell)), r(static_cast<std::size_t>(ell));
    for (int i = 1; i <= ell; ++i) {
        r[static_cast<std::size_t>(i - 1)] = ell - i + 1;
        l[static_cast<std::size_t>(i - 1)] = lam.part(i) + ell - i + 1;
    }
    Rational num(1), den(1);
    for (int i = 0; i < ell; ++i) {
        num *= l[static_cast<std::size_t>(i)];
        den *= r[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < ell; ++j) {
            num *= (l[i] * l[i] - l[j] * l[j]);
            den *= (r[i] * r[i] - r[j] * r[j]);
        }
    }
    return num / den;
}

} // namespace

// dim V_{so_ell}(lambda) for a partition with at most floor(ell/2) parts.
Rational dim_so(const Partition& lam, int ell) {
    int k = ell / 2;
    assert(lam.length() <= k);
    if (k == 0) return 1;
    if (ell % 2 == 1) {
        // B_k with doubled entries: L_i = 2 lambda_i + 2(k - i) + 1
        std::vector<long> L(static_cast<std::size_t>(k)), R(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i) {
            R[static_cast<std::size_t>(i - 1)] = 2 * (k - i) + 1;
            L[static_cast<std::size_t>(i - 1)] = 2 * lam.part(i) + 2 * (k - i) + 1;
        }
        Rational num(1), den(1);
        for (int i = 0; i < k; ++i) {
            num *= L[static_cast<std::size_t>(i)];
            den *= R[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                num *= (L[i] * L[i] - L[j] * L[j]);
                den *= (R[i] * R[i] - R[j] * R[j]);
            }
        }
        return num / den;
    }
    // D_k: l_i = lambda_i + k - i
    std::vector<long> L(static_cast<std::size_t>(k)), R(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        R[static_cast<std::size_t>(i - 1)] = k - i;
        L[static_cast<std::size_t>(i - 1)] = lam.part(i) + k - i;
    }
    Rational num(1), den(1);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            num *= (L[i] * L[i] - L[j] * L[j]);
            den *= (R[i] * R[i] - R[j] * R[j]);
        }
    return num / den;
}

long dim_G(const Partition& lam, const GroupSpec& G) {
    if (G.family == GroupFamily::Sp) {
        assert(in_PG(lam, G));
        Rational d = dim_sp(lam, G.ell);
        assert(d.get_den() == 1);
        return d.get_num().get_si();
    }
    assert(in_PG(lam, G));
    Partition use = lam;
    if (use.conjugate().part(1) > G.ell / 2) use = associated_partition(use, G.ell);
    Rational d = dim_so(use, G.ell);
    if (o_split_case(use, G.ell)) d *= 2;
    assert(d.get_den() == 1);
    return d.get_num().get_si();
}

std::vector<Partition> enumerate_PG(const GroupSpec& G, const Epsilon& eps, int d) {
    std::vector<Partition> out;
    for (const Partition& lam : partitions_of(d))
        if (in_PG_eps(lam, G, eps)) out.push_back(lam);
    return out;
}

} // namespace qhowe
