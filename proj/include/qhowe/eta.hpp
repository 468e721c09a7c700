#pragma once

#include "qhowe/relations.hpp"

namespace qhowe {

enum class EtaKind { D, C, CPrime };

// The anti-involution matching the module family: eta_D for X=D,
// eta_C for (C, W), eta'_C for (C, W2).
EtaKind eta_for(const ModuleConfig& cfg);

// eta(x) as a word in the generators, for x in {e_i, f_i, k_*}.
WordPtr eta_of_e(EtaKind kind, const ModuleConfig& cfg, int i);
WordPtr eta_of_f(EtaKind kind, const ModuleConfig& cfg, int i);

// Verifies (x v, w) = (v, eta(x) w) for every generator x and all basis pairs
// v, w in degrees <= D, plus nonzero diagonal Gram entries.
Report eta_adjoint_check(const ModuleConfig& cfg, EtaKind kind, int D, int jobs = 1);
Report eta_adjoint_check(const ModuleConfig& cfg, int D, int jobs = 1);

} // namespace qhowe
