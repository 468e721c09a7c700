#pragma once

#include <map>

#include "qhowe/iquantum.hpp"
#include "qhowe/linalg.hpp"

namespace qhowe {

struct StabilityViolation : std::runtime_error {
    explicit StabilityViolation(const std::string& what) : std::runtime_error(what) {}
};

// Exact basis of the joint kernel of all e_i on the (degree, weight) slice.
// Deterministic: lowest-column pivoting, simplest-pivot tie break.
std::vector<SparseVec> hwv_space(const ModuleConfig& cfg, const Weight& w, int d);

struct DecompRow {
    Partition lambda;
    Weight weight;
    int multiplicity = 0;
    long classicalDim = 0;
    bool match = false;
    std::optional<int> endoDim;
};

// One row per lambda in P(G_ell)_eps with |lambda| <= d_max, sorted by
// (|lambda|, lex); multiplicity = dim hwv_space(Lambda_{lambda,eps}).
std::vector<DecompRow> decompose(const ModuleConfig& cfg, int d_max, int jobs = 1);

struct ScanResult {
    int degree = 0;
    int total = 0;
    long expected_total = 0;
    std::map<Weight, int> by_weight;
    bool totals_match = false;
    bool weights_predicted = false; // every kernel weight equals some Lambda_{lambda,eps}
};

// Joint e_i kernel over the whole degree slice, split by weight, checked
// against sum of classical dimensions and the predicted weight set.
ScanResult full_kernel_scan(const ModuleConfig& cfg, int d);

struct RestrictedModule {
    Partition lambda;
    std::vector<SparseVec> basis;                       // highest weight vectors
    std::vector<std::pair<std::string, std::vector<std::vector<Scalar>>>> gens; // restricted matrices
};

// Verifies every iquantum generator maps the hwv space into itself and
// returns the restricted matrices; throws StabilityViolation otherwise.
RestrictedModule b_stability(const ModuleConfig& cfg, const IqgParams& params, const Partition& lam);

// Dimension of the space of matrices commuting with every restricted
// generator: 1 for an irreducible multiplicity space, 2 for the split O-case.
int endo_dim(const ModuleConfig& cfg, const IqgParams& params, const Partition& lam);
int endo_dim(const RestrictedModule& mod);

} // namespace qhowe
