#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qhowe/combinatorics.hpp"
#include "qhowe/scalar.hpp"

namespace qhowe {

// Basis vector of W^{\otimes r}: r occupation vectors of length n, stored
// row-major as one byte sequence (factor s, slot t) -> m[s*n + t].
struct TensorState {
    std::vector<std::uint8_t> m;
    int rows = 0; // r
    int cols = 0; // n

    TensorState() = default;
    TensorState(int r, int n) : m(static_cast<std::size_t>(r) * n, 0), rows(r), cols(n) {}

    std::uint8_t at(int s, int t) const { // 1-based
        return m[static_cast<std::size_t>(s - 1) * cols + (t - 1)];
    }
    std::uint8_t& at(int s, int t) {
        return m[static_cast<std::size_t>(s - 1) * cols + (t - 1)];
    }

    int degree() const;
    long column_sum(int t) const;
    long row_sum(int s) const;
    bool valid(const Epsilon& eps) const; // occupancy <= 1 on fermionic slots

    // occupation matrix view (row-major r x n); the inverse identification
    std::vector<std::vector<int>> matrix_view() const;
    static TensorState from_matrix(const std::vector<std::vector<int>>& M);

    bool operator==(const TensorState& o) const { return rows == o.rows && m == o.m; }
    bool operator!=(const TensorState& o) const { return !(*this == o); }
    bool operator<(const TensorState& o) const { return m < o.m; } // lexicographic
    std::string str() const;
};

struct TensorStateHash {
    std::size_t operator()(const TensorState& s) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint8_t b : s.m) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// U-weight of a basis state: (r/2) Lambda + sum_t (column sum_t) delta_t.
Weight state_weight(const TensorState& x);

struct Slice {
    Epsilon eps;
    int r;
    int degree;
    std::optional<Weight> weight;
    std::vector<TensorState> states; // lexicographic
    std::unordered_map<TensorState, int, TensorStateHash> index;

    int dim() const { return static_cast<int>(states.size()); }
    int index_of(const TensorState& s) const {
        auto it = index.find(s);
        return it == index.end() ? -1 : it->second;
    }
};

using SlicePtr = std::shared_ptr<const Slice>;

SlicePtr enumerate_slice(const Epsilon& eps, int r, int d, std::optional<Weight> w = std::nullopt);

// Cache keyed by (eps, r, d, weight); first writer wins under concurrency.
class SliceCache {
  public:
    SlicePtr get(const Epsilon& eps, int r, int d, std::optional<Weight> w = std::nullopt);
    static SliceCache& global();

  private:
    std::mutex mu_;
    std::map<std::string, SlicePtr> map_;
};

// Exact sparse vector over the tensor basis, ordered by state.
class SparseVec {
  public:
    using Map = std::map<TensorState, Scalar>;

    SparseVec() = default;
    static SparseVec unit(const TensorState& s) {
        SparseVec v;
        v.entries_[s] = Scalar(1);
        return v;
    }

    const Map& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    void add(const TensorState& s, const Scalar& c);
    SparseVec& operator+=(const SparseVec& o);
    SparseVec& axpy(const Scalar& a, const SparseVec& o); // *this += a * o
    SparseVec scaled(const Scalar& a) const;
    SparseVec operator+(const SparseVec& o) const;
    SparseVec operator-(const SparseVec& o) const;

    Scalar coeff(const TensorState& s) const;
    bool operator==(const SparseVec& o) const { return entries_ == o.entries_; }

  private:
    Map entries_;
};

// Polarization form: diagonal on basis states with
// norm(|m>) = prod_factors prod_slots q^{m(m-1)/2} [m]!.
Scalar state_norm(const TensorState& s);
Scalar pairing(const SparseVec& u, const SparseVec& w);
std::vector<Scalar> gram_diagonal(const Slice& slice);

} // namespace qhowe
