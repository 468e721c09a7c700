#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qhowe/config.hpp"
#include "qhowe/fock.hpp"

namespace qhowe {

// Generator symbols acted through one engine:
//   E/F/Knode/Klat/Sigma  generators of U_X(eps) extended over blocks,
//   SlE/SlF/SlK           U(sl_r) generators on the transposed matrix view.
struct GenSym {
    enum class Type { E, F, Knode, Klat, Sigma, SlE, SlF, SlK };
    Type type;
    int idx = 0;            // node index (E/F/Knode/SlE/SlF), slot (Sigma)
    std::vector<long> mu;   // Klat: over delta_1..delta_n; SlK: over rows 1..r

    static GenSym e(int i) { return {Type::E, i, {}}; }
    static GenSym f(int i) { return {Type::F, i, {}}; }
    static GenSym k_node(int i, long exp = 1) { return {Type::Knode, i, {exp}}; } // k_{alpha_i}^exp
    static GenSym k_lat(std::vector<long> mu) { return {Type::Klat, 0, std::move(mu)}; }
    static GenSym k_lat_inv(const std::vector<long>& mu) {
        std::vector<long> neg(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) neg[i] = -mu[i];
        return k_lat(std::move(neg));
    }
    static GenSym sigma(int j) { return {Type::Sigma, j, {}}; }
    static GenSym sl_e(int j) { return {Type::SlE, j, {}}; }
    static GenSym sl_f(int j) { return {Type::SlF, j, {}}; }
    static GenSym sl_k(std::vector<long> u) { return {Type::SlK, 0, std::move(u)}; }
    static GenSym sl_k_alpha(int j, int r, long mult = 1) {
        std::vector<long> u(static_cast<std::size_t>(r), 0);
        u[static_cast<std::size_t>(j - 1)] = mult;
        u[static_cast<std::size_t>(j)] = -mult;
        return sl_k(std::move(u));
    }

    std::string str() const;
    bool operator==(const GenSym& o) const { return type == o.type && idx == o.idx && mu == o.mu; }
};

struct DegInterval {
    int lo = 0;
    int hi = 0;
    DegInterval operator+(const DegInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    DegInterval hull(const DegInterval& o) const {
        return {std::min(lo, o.lo), std::max(hi, o.hi)};
    }
};

// Sparse exact linear operator given by its action on basis states.
struct LinOp {
    std::function<SparseVec(const TensorState&)> action;
    DegInterval degShift;
    std::optional<Weight> weightShift;

    SparseVec apply(const TensorState& s) const { return action(s); }
    SparseVec apply(const SparseVec& v) const {
        SparseVec out;
        for (const auto& [s, c] : v.entries()) out.axpy(c, action(s));
        return out;
    }
};

// Evaluates generator symbols on basis states for one module configuration.
class Engine {
  public:
    explicit Engine(ModuleConfig cfg) : cfg_(std::move(cfg)) {}

    const ModuleConfig& cfg() const { return cfg_; }

    SparseVec apply(const GenSym& sym, const TensorState& x) const;
    // Diagonal symbols evaluated without building a vector.
    bool is_diagonal(const GenSym& sym) const;
    Scalar eigenvalue(const GenSym& sym, const TensorState& x) const;

    DegInterval deg_shift(const GenSym& sym) const;
    std::optional<Weight> weight_shift(const GenSym& sym) const;

    LinOp op(const GenSym& sym) const;

    // Eigenvalue of the lattice Cartan k_mu on one factor's occupation vector,
    // including the branch constant c^{sum(mu)} (c = iv for (D,W), else v).
    Scalar factor_k_lat(const std::vector<long>& mu, const TensorState& x, int factor) const;

  private:
    struct Impl;
    ModuleConfig cfg_;

    Scalar block_k_node(int i, const TensorState& x, int block) const;
    Scalar block_k_lat(const std::vector<long>& mu, const TensorState& x, int block) const;
    void block_e(int i, const TensorState& x, int block, std::vector<std::pair<TensorState, Scalar>>& out) const;
    void block_f(int i, const TensorState& x, int block, std::vector<std::pair<TensorState, Scalar>>& out) const;
    bool state_ok(const TensorState& x) const { return x.valid(cfg_.eps); }
};

} // namespace qhowe
