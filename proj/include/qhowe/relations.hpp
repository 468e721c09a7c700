#pragma once

#include <string>
#include <vector>

#include "qhowe/report.hpp"
#include "qhowe/word.hpp"

namespace qhowe {

struct TruncationUnsafe : std::runtime_error {
    explicit TruncationUnsafe(const std::string& what) : std::runtime_error(what) {}
};

struct Relation {
    std::string name;
    WordPtr expr; // must act as the zero operator
};

// Defining relations of U_X(eps): the eps-conditional catalog, all (e -> f)
// partners, the k-conjugation identities and the Cartan commutators (with the
// q^2 - q^{-2} divisor at node 0 for type C).
std::vector<Relation> relation_catalog(char X, const Epsilon& eps);

// Same catalog with one quantum Serre sign deliberately broken; used as the
// harness negative control. Requires a node with eps_i = eps_{i+1} = 1.
std::vector<Relation> mutated_catalog(char X, const Epsilon& eps);

// sigma-twisted generators tau(E_i), tau(F_i), tau(K_i)^{+-1} for i in I.
struct TauOps {
    std::vector<WordPtr> E, F, K, Kinv;
    std::vector<int> parity; // p(i): 0 even, 1 odd
};
TauOps tau_operators(const ModuleConfig& cfg);

// sigma_j and diagram-parity helpers
WordPtr sigma_word(int j);
int node_parity(char X, const Epsilon& eps, int i); // p(i)

// Defining relations of the quantum superalgebra presentation, expressed in
// the tau-twisted operators. Opt-in (larger words).
std::vector<Relation> yamane_catalog(const ModuleConfig& cfg);

// U_q(sl_r) relations for the transposed type-A action (nodes 1..r-1).
std::vector<Relation> sl_relation_catalog(int r);

// Evaluates every catalog relation on all slices of degree d with
// d + max positive partial shift <= D and asserts the zero vector.
Report verify_relations(const ModuleConfig& cfg, int D, const std::vector<Relation>& catalog,
                        int jobs = 1);
Report verify_relations(const ModuleConfig& cfg, int D, int jobs = 1);

} // namespace qhowe
