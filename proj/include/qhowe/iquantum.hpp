#pragma once

#include <map>

#include "qhowe/relations.hpp"

namespace qhowe {

enum class IqgFamily { AI, AII }; // (sl_l, so_l) and (sl_2l, sp_2l)

struct IqgParams {
    IqgFamily family;
    std::map<int, Scalar> varsigma; // i in I_circ
    std::map<int, Scalar> kappa;    // i in I_circ (AII forces 0)

    static IqgParams defaults(IqgFamily fam, int ell);
    static IqgParams uniform(IqgFamily fam, int ell, const Scalar& varsigma,
                             const Scalar& kappa = Scalar(0));
};

IqgFamily iqg_family_for(const ModuleConfig& cfg); // kind W -> AI, kind W2 -> AII
std::vector<int> iqg_circ_nodes(IqgFamily fam, int ell);
std::vector<int> iqg_bullet_nodes(IqgFamily fam, int ell);

// bar involution on k = Q(i)(v): q -> q^{-1}
Scalar bar(const Scalar& s);

// T_{w_bullet}(e_i) in closed form:
// e_{i+1}(e_{i-1} e_i - q^{-1} e_i e_{i-1}) - q^{-1}(e_{i-1} e_i - q^{-1} e_i e_{i-1}) e_{i+1}
WordPtr braid_image_word(int i);

// B_i = f_i + varsigma_i e_i k_i^{-1} + kappa_i k_i^{-1}            (AI)
// B_i = f_i + varsigma_i T_{w_bullet}(e_i) k_i^{-1}                 (AII)
WordPtr build_Bi(const ModuleConfig& cfg, const IqgParams& params, int i);

// Every generator of U^i(k) with its name: all B_i, plus e_j, f_j, k_j^{+-1}
// for j in I_bullet (AII).
std::vector<std::pair<std::string, WordPtr>> iqg_generators(const ModuleConfig& cfg,
                                                            const IqgParams& params);

// Admissibility conditions for (varsigma, kappa) and specializability
// (varsigma regular at v=1 with value -1).
Report validate_params(const ModuleConfig& cfg, const IqgParams& params);

// Commutators [x, y] for x over the U_X(eps) generators and y over the
// iquantum generators (plus the Prop-4.1 sl_r generators) vanish on all
// slices of degree <= D-2.
Report commutant_check(const ModuleConfig& cfg, const IqgParams& params, int D, int jobs = 1);

} // namespace qhowe
