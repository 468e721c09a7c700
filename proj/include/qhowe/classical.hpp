#pragma once

#include "qhowe/relations.hpp"

namespace qhowe {

// sigma_j and the tau-twisted generators as standalone operators.
std::vector<std::pair<std::string, LinOp>> tau_sigma_ops(const ModuleConfig& cfg);

// Classical-limit verification:
//  (a) every matrix entry of tau(E_i), tau(F_i), tau(K_i) on slices of degree
//      <= D is regular at v = 1,
//  (b) H_i = lim (K_i - K_i^{-1})/(q - q^{-1}) (divisor q^2 - q^{-2} at node 0
//      for type C) is diagonal with integer or half-integer entries,
//  (c) the limit matrices satisfy the supercommutator relations
//      E_i F_j - (-1)^{p(i)p(j)} F_j E_i = (-1)^{eps(i)} delta_ij H_i,
//  (d) squares of odd-node limit operators vanish.
// For X = D the psi-twisted module is expected; an untwisted type-D run is
// recorded as informational only.
Report classical_limit_check(const ModuleConfig& cfg, int D, int jobs = 1);

} // namespace qhowe
