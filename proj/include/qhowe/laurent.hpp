#pragma once

#include <utility>
#include <vector>

#include "qhowe/numeric.hpp"

namespace qhowe {

// Sparse Laurent polynomial in v = q^{1/2} over Q(i).
// Terms sorted by ascending exponent, no zero coefficients stored.
class LaurentPoly {
  public:
    using Term = std::pair<int, GaussianRational>;

    LaurentPoly() = default;
    LaurentPoly(const GaussianRational& c) {
        if (!c.is_zero()) terms_.push_back({0, c});
    }
    LaurentPoly(long c) : LaurentPoly(GaussianRational(c)) {}

    static LaurentPoly monomial(int exp, GaussianRational c = GaussianRational(1)) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_.push_back({exp, std::move(c)});
        return p;
    }
    // q^k = v^{2k}
    static LaurentPoly q_power(int k) { return monomial(2 * k); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
    }
    // a Laurent monomial c*v^k
    bool is_unit() const { return terms_.size() == 1; }

    int min_exp() const { return terms_.front().first; }
    int max_exp() const { return terms_.back().first; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly shifted(int dexp) const; // multiply by v^dexp
    LaurentPoly scaled(const GaussianRational& c) const;

    GaussianRational eval_at_one() const; // substitute v = 1
    GaussianRational coeff(int exp) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // For canonical-form bookkeeping inside Scalar.
    static void push_term(std::vector<Term>& out, int exp, const GaussianRational& c) {
        if (!c.is_zero()) out.push_back({exp, c});
    }
    static LaurentPoly from_terms(std::vector<Term> t) {
        LaurentPoly p;
        p.terms_ = std::move(t);
        return p;
    }

  private:
    std::vector<Term> terms_;
};

// Exact polynomial gcd over Q(i)[v] after clearing v-powers; the result is
// normalized with lowest-exponent coefficient 1.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);
// Exact division; aborts if the division is not exact.
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b);

std::string to_string(const LaurentPoly& p);

} // namespace qhowe
