#pragma once

#include <stdexcept>
#include <string>

#include "qhowe/combinatorics.hpp"

namespace qhowe {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class ModuleKind { W, W2 };

// One of the four module families:
//   (D, W)  requires eps_1 = 1        (C, W)  requires eps_1 = 0
//   (D, W2) requires eps_1 = 0        (C, W2) requires eps_1 = 1
struct ModuleConfig {
    char X;          // 'C' or 'D'
    Epsilon eps;
    ModuleKind kind;
    int ell;
    bool psiTwist;   // type D only; flips the sign of the f_0/k_0 block operators

    ModuleConfig(char X_, Epsilon eps_, ModuleKind kind_, int ell_, bool psiTwist_ = true)
        : X(X_), eps(std::move(eps_)), kind(kind_), ell(ell_), psiTwist(X_ == 'D' && psiTwist_) {
        validate();
    }

    int n() const { return eps.n(); }
    int blocks() const { return ell; }
    int factors_per_block() const { return kind == ModuleKind::W ? 1 : 2; }
    int factors() const { return ell * factors_per_block(); } // r

    // Cartan branch constant c with k_{delta_j} acting per factor by c * q_j^{m_j}:
    // c = i*v for (D, W), c = v otherwise.
    bool branch_needs_i() const { return X == 'D' && kind == ModuleKind::W; }

    GroupSpec group() const {
        return {kind == ModuleKind::W ? GroupFamily::O : GroupFamily::Sp, ell};
    }

    std::string kind_str() const { return kind == ModuleKind::W ? "W" : "W2"; }
    std::string str() const;

  private:
    void validate() const {
        if (ell < 1) throw ConfigError("ModuleConfig: ell must be positive");
        if (X != 'C' && X != 'D') throw ConfigError("ModuleConfig: type must be C or D");
        int e1 = eps.at(1);
        bool ok = (X == 'D' && kind == ModuleKind::W && e1 == 1) ||
                  (X == 'D' && kind == ModuleKind::W2 && e1 == 0) ||
                  (X == 'C' && kind == ModuleKind::W && e1 == 0) ||
                  (X == 'C' && kind == ModuleKind::W2 && e1 == 1);
        if (!ok)
            throw ConfigError(std::string("ModuleConfig: eps_1=") + std::to_string(e1) +
                              " incompatible with (X=" + X + ", kind=" + kind_str() +
                              "); see the module-structure propositions for the four families");
    }
};

} // namespace qhowe
