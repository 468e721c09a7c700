#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhowe/numeric.hpp"

namespace qhowe {

struct ShapeNotExhausted : std::runtime_error {
    explicit ShapeNotExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Parity sequence eps = (eps_1, ..., eps_n), eps_i in {0,1}.
struct Epsilon {
    std::vector<int> bits;

    explicit Epsilon(std::vector<int> b);
    static Epsilon parse(const std::string& s); // string of '0'/'1'

    int n() const { return static_cast<int>(bits.size()); }
    int n0() const;
    int n1() const;
    int at(int i) const { return bits[static_cast<std::size_t>(i - 1)]; } // 1-based
    int sign_at(int i) const { return at(i) == 0 ? 1 : -1; }             // (-1)^{eps_i}

    bool operator==(const Epsilon& o) const { return bits == o.bits; }
    std::string str() const;
};

// Weight (s/2)*Lambda + sum m_i delta_i, with Lambda = sum (-1)^{eps_i} delta_i.
// The Lambda part is tracked by the integer s to avoid half-integer entries.
struct Weight {
    long s = 0;
    std::vector<long> m;

    Weight() = default;
    Weight(long s_, std::vector<long> m_) : s(s_), m(std::move(m_)) {}
    static Weight zero(int n) { return Weight(0, std::vector<long>(static_cast<std::size_t>(n), 0)); }
    static Weight lambda(int n) { return Weight(2, std::vector<long>(static_cast<std::size_t>(n), 0)); }
    static Weight delta(int n, int i); // delta_i, 1-based
    static Weight alpha(int n, int i, char X); // simple root alpha_i, i in 0..n-1

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    bool operator==(const Weight& o) const { return s == o.s && m == o.m; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return s != o.s ? s < o.s : m < o.m; }

    long degree() const; // sum of m_i
    std::string str() const;
};

// Pure-lattice part of a simple root as integer vector over delta_1..delta_n.
std::vector<long> alpha_vector(int n, int i, char X);

struct Partition {
    std::vector<int> parts; // weakly decreasing, no trailing zeros

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const; // |lambda|
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i <= length() ? parts[static_cast<std::size_t>(i - 1)] : 0; } // 1-based
    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    std::string str() const; // "(2,1)" or "()"
};

std::vector<Partition> partitions_of(int d);

enum class GroupFamily { O, Sp };

struct GroupSpec {
    GroupFamily family;
    int ell;

    std::string str() const;
};

bool in_PG(const Partition& lam, const GroupSpec& G);
bool hook_condition(const Partition& lam, const Epsilon& eps); // lambda_{n0+1} <= n1
bool in_PG_eps(const Partition& lam, const GroupSpec& G, const Epsilon& eps);

// Highest weight of the irreducible polynomial U_A(eps)-module for lambda,
// computed by the row/column peeling rule; throws ShapeNotExhausted if the
// hook condition fails.
std::vector<long> omega_lambda(const Partition& lam, const Epsilon& eps);

// Lambda_{lambda,eps} = r*ell*Lambda + sum omega_i delta_i with r = 1/2 (O), 1 (Sp).
Weight lambda_weight(const Partition& lam, const Epsilon& eps, const GroupSpec& G);

// dim V_{G_ell}(lambda) by the Weyl dimension formula (exact integers).
Rational dim_so(const Partition& lam, int ell);
long dim_G(const Partition& lam, const GroupSpec& G);

// Associated partition for O_ell: first column length replaced by ell - lambda'_1.
Partition associated_partition(const Partition& lam, int ell);
// Split case for O_ell: ell even and exactly ell/2 nonzero parts.
bool o_split_case(const Partition& lam, int ell);

std::vector<Partition> enumerate_PG(const GroupSpec& G, const Epsilon& eps, int d);

} // namespace qhowe
