#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qhowe/laurent.hpp"

namespace qhowe {

struct PoleAtOne : std::runtime_error {
    explicit PoleAtOne(const std::string& what) : std::runtime_error(what) {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Element of Q(i)(v) stored as a reduced fraction of Laurent polynomials.
// Canonical form: gcd(num, den) is a unit and den has lowest-exponent
// coefficient 1 at exponent 0, so equal values have equal representations.
class Scalar {
  public:
    Scalar() : num_(), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}
    Scalar(const GaussianRational& c) : num_(c), den_(1) {}
    Scalar(const LaurentPoly& p) : num_(p), den_(1) {}
    Scalar(LaurentPoly num, LaurentPoly den);

    static Scalar v_power(int k) { return Scalar(LaurentPoly::monomial(k)); }
    static Scalar q_power(int k) { return Scalar(LaurentPoly::q_power(k)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Exact value at v = 1; throws PoleAtOne when den(1) = 0.
    GaussianRational eval_at_one() const;

    // Elimination pivots prefer fewer stored terms.
    std::size_t term_count() const { return num_.terms().size() + den_.terms().size(); }

  private:
    LaurentPoly num_;
    LaurentPoly den_;
};

// q-combinatorics in v = q^{1/2}.
LaurentPoly quantum_int(int m);                       // [m]
LaurentPoly q_factorial(int m);                       // [m]!
std::pair<LaurentPoly, Scalar> q_factorial_binomial(int m, int k);
LaurentPoly q_binomial(int m, int k);                 // [m choose k], reduced to a polynomial

// q_i = (-1)^{eps_i} q^{(-1)^{eps_i}}: q for parity 0, -q^{-1} for parity 1.
Scalar q_sub(int parity);
Scalar q_sub_power(int parity, long e); // q_i^e
// bq(mu, nu) = prod_i q_i^{mu_i nu_i}, a signed Laurent monomial.
Scalar bq(const std::vector<long>& mu, const std::vector<long>& nu, const std::vector<int>& eps);

// Text grammar used by every report:
//   term  = coeff "*v^" int
//   coeff = rat | rat "+" rat "i"
//   poly  = term ("+" term)*
//   scalar = poly | "(" poly ")/(" poly ")"
std::string to_string(const Scalar& s);
Scalar parse_scalar(const std::string& text);
LaurentPoly parse_laurent(const std::string& text);

} // namespace qhowe
