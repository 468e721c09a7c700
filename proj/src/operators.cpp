#include "qhowe/operators.hpp"

#include <cassert>

namespace qhowe {

std::string GenSym::str() const {
    switch (type) {
        case Type::E: return "e" + std::to_string(idx);
        case Type::F: return "f" + std::to_string(idx);
        case Type::Knode: return "k" + std::to_string(idx);
        case Type::Klat: {
            std::string s = "k[";
            for (std::size_t i = 0; i < mu.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(mu[i]);
            }
            return s + "]";
        }
        case Type::Sigma: return "sigma" + std::to_string(idx);
        case Type::SlE: return "E" + std::to_string(idx);
        case Type::SlF: return "F" + std::to_string(idx);
        case Type::SlK: {
            std::string s = "K[";
            for (std::size_t i = 0; i < mu.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(mu[i]);
            }
            return s + "]";
        }
    }
    return "?";
}

namespace {

// Cartan eigenvalues are always of the form i^unit * v^vexp; tracking them as
// integer pairs avoids polynomial allocation in the inner loops.
struct Mono {
    int unit = 0; // power of i, mod 4
    int vexp = 0;

    Mono mul(const Mono& o) const { return {(unit + o.unit) & 3, vexp + o.vexp}; }
    Mono inv() const { return {(4 - unit) & 3, -vexp}; }
    GaussianRational coeff() const {
        switch (unit & 3) {
            case 0: return GaussianRational(1);
            case 1: return GaussianRational::i();
            case 2: return GaussianRational(-1);
            default: return -GaussianRational::i();
        }
    }
    Scalar to_scalar() const { return Scalar(LaurentPoly::monomial(vexp, coeff())); }
    bool is_one() const { return unit == 0 && vexp == 0; }
};

// q_j^e: q^e for parity 0, (-q^{-1})^e for parity 1
Mono qj_pow_m(const Epsilon& eps, int j, long e) {
    if (eps.at(j) == 0) return {0, static_cast<int>(2 * e)};
    return {(e % 2 != 0) ? 2 : 0, static_cast<int>(-2 * e)};
}

Mono q_pow_m(long e) { return {0, static_cast<int>(2 * e)}; }

// num * (i^unit v^vexp) preserves the canonical fraction form
Scalar apply_mono(const Scalar& s, const Mono& m) {
    if (m.is_one()) return s;
    LaurentPoly num = s.num().shifted(m.vexp);
    if (m.unit != 0) num = num.scaled(m.coeff());
    if (s.is_polynomial()) return Scalar(std::move(num));
    return Scalar(std::move(num), s.den());
}

} // namespace

struct Engine::Impl {
    // factor-level k_mu eigenvalue including the branch constant c^{sum mu}
    static Mono factor_k(const Engine& eng, const std::vector<long>& mu, const TensorState& x,
                         int factor) {
        long musum = 0;
        Mono acc;
        for (int j = 1; j <= eng.cfg_.n(); ++j) {
            long u = mu[static_cast<std::size_t>(j - 1)];
            if (u == 0) continue;
            musum += u;
            acc = acc.mul(qj_pow_m(eng.cfg_.eps, j, u * x.at(factor, j)));
        }
        if (musum != 0) {
            // c = i*v for (D, W), c = v otherwise
            Mono c{eng.cfg_.branch_needs_i() ? static_cast<int>(((musum % 4) + 4) % 4) : 0,
                   static_cast<int>(musum)};
            acc = acc.mul(c);
        }
        return acc;
    }

    static Mono block_k(const Engine& eng, const std::vector<long>& mu, const TensorState& x,
                        int block) {
        int fpb = eng.cfg_.factors_per_block();
        Mono acc;
        for (int a = 0; a < fpb; ++a)
            acc = acc.mul(factor_k(eng, mu, x, (block - 1) * fpb + a + 1));
        return acc;
    }

    static Mono block_k_node(const Engine& eng, int i, const TensorState& x, int block) {
        Mono v = block_k(eng, alpha_vector(eng.cfg_.n(), i, eng.cfg_.X), x, block);
        if (i == 0 && eng.cfg_.psiTwist) v.unit = (v.unit + 2) & 3;
        return v;
    }
};

Scalar Engine::factor_k_lat(const std::vector<long>& mu, const TensorState& x, int factor) const {
    return Impl::factor_k(*this, mu, x, factor).to_scalar();
}

Scalar Engine::block_k_lat(const std::vector<long>& mu, const TensorState& x, int block) const {
    return Impl::block_k(*this, mu, x, block).to_scalar();
}

Scalar Engine::block_k_node(int i, const TensorState& x, int block) const {
    return Impl::block_k_node(*this, i, x, block).to_scalar();
}

// Single-block raising operators; appends (new full state, coeff) pairs.
void Engine::block_e(int i, const TensorState& x, int block,
                     std::vector<std::pair<TensorState, Scalar>>& out) const {
    const Epsilon& eps = cfg_.eps;
    int fpb = cfg_.factors_per_block();
    int a = (block - 1) * fpb + 1; // first factor of the block

    auto emit = [&](TensorState y, Scalar c) {
        if (!c.is_zero() && state_ok(y)) out.push_back({std::move(y), std::move(c)});
    };

    if (i != 0) {
        // type A action, one coproduct step inside a W2 block
        {
            int m1 = x.at(a, i + 1);
            if (m1 > 0) {
                TensorState y = x;
                y.at(a, i) += 1;
                y.at(a, i + 1) -= 1;
                emit(std::move(y), Scalar(quantum_int(m1)));
            }
        }
        if (fpb == 2) {
            int b = a + 1;
            int m2 = x.at(b, i + 1);
            if (m2 > 0) {
                Mono dress = qj_pow_m(eps, i, x.at(a, i)).mul(qj_pow_m(eps, i + 1, -x.at(a, i + 1)));
                TensorState y = x;
                y.at(b, i) += 1;
                y.at(b, i + 1) -= 1;
                emit(std::move(y), apply_mono(Scalar(quantum_int(m2)), dress));
            }
        }
        return;
    }

    // node 0
    if (cfg_.kind == ModuleKind::W) {
        if (cfg_.X == 'D') {
            // e_0 |m> = [m_2] |m - e_1 - e_2>
            int m2 = x.at(a, 2);
            if (m2 > 0 && x.at(a, 1) > 0) {
                TensorState y = x;
                y.at(a, 1) -= 1;
                y.at(a, 2) -= 1;
                emit(std::move(y), Scalar(quantum_int(m2)));
            }
        } else {
            // e_0 |m> = [m_1][m_1 - 1]/[2]^2 |m - 2 e_1>
            int m1 = x.at(a, 1);
            if (m1 >= 2) {
                TensorState y = x;
                y.at(a, 1) -= 2;
                emit(std::move(y),
                     Scalar(quantum_int(m1) * quantum_int(m1 - 1), quantum_int(2) * quantum_int(2)));
            }
        }
        return;
    }

    int b = a + 1;
    if (cfg_.X == 'D') {
        // e_0 = [m_2][m'_1] (a -= e2, b -= e1)
        //     - q_1^{-m'_1} q_2^{-m_2} q^{-1} [m_1][m'_2] (a -= e1, b -= e2)
        int m2 = x.at(a, 2), mp1 = x.at(b, 1);
        if (m2 > 0 && mp1 > 0) {
            TensorState y = x;
            y.at(a, 2) -= 1;
            y.at(b, 1) -= 1;
            emit(std::move(y), Scalar(quantum_int(m2) * quantum_int(mp1)));
        }
        int m1 = x.at(a, 1), mp2 = x.at(b, 2);
        if (m1 > 0 && mp2 > 0) {
            Mono dress =
                qj_pow_m(eps, 1, -mp1).mul(qj_pow_m(eps, 2, -m2)).mul(q_pow_m(-1)).mul({2, 0});
            TensorState y = x;
            y.at(a, 1) -= 1;
            y.at(b, 2) -= 1;
            emit(std::move(y), apply_mono(Scalar(quantum_int(m1) * quantum_int(mp2)), dress));
        }
    } else {
        // e_0 = [m_1][m'_1] (a -= e1, b -= e1)
        int m1 = x.at(a, 1), mp1 = x.at(b, 1);
        if (m1 > 0 && mp1 > 0) {
            TensorState y = x;
            y.at(a, 1) -= 1;
            y.at(b, 1) -= 1;
            emit(std::move(y), Scalar(quantum_int(m1) * quantum_int(mp1)));
        }
    }
}

void Engine::block_f(int i, const TensorState& x, int block,
                     std::vector<std::pair<TensorState, Scalar>>& out) const {
    const Epsilon& eps = cfg_.eps;
    int fpb = cfg_.factors_per_block();
    int a = (block - 1) * fpb + 1;

    auto emit = [&](TensorState y, Scalar c) {
        if (!c.is_zero() && state_ok(y)) out.push_back({std::move(y), std::move(c)});
    };

    if (i != 0) {
        if (fpb == 1) {
            int m1 = x.at(a, i);
            if (m1 > 0) {
                TensorState y = x;
                y.at(a, i) -= 1;
                y.at(a, i + 1) += 1;
                emit(std::move(y), Scalar(quantum_int(m1)));
            }
            return;
        }
        int b = a + 1;
        // f_i = q_i^{-m'_i} q_{i+1}^{m'_{i+1}} [m_i] (on a) + [m'_i] (on b)
        int m1 = x.at(a, i);
        if (m1 > 0) {
            Mono dress = qj_pow_m(eps, i, -x.at(b, i)).mul(qj_pow_m(eps, i + 1, x.at(b, i + 1)));
            TensorState y = x;
            y.at(a, i) -= 1;
            y.at(a, i + 1) += 1;
            emit(std::move(y), apply_mono(Scalar(quantum_int(m1)), dress));
        }
        int m2 = x.at(b, i);
        if (m2 > 0) {
            TensorState y = x;
            y.at(b, i) -= 1;
            y.at(b, i + 1) += 1;
            emit(std::move(y), Scalar(quantum_int(m2)));
        }
        return;
    }

    bool twist = (cfg_.X == 'D' && cfg_.psiTwist);
    if (cfg_.kind == ModuleKind::W) {
        if (cfg_.X == 'D') {
            // f_0 |m> = |m + e_1 + e_2>
            TensorState y = x;
            y.at(a, 1) += 1;
            y.at(a, 2) += 1;
            emit(std::move(y), Scalar(twist ? -1 : 1));
        } else {
            // f_0 |m> = -|m + 2 e_1>
            TensorState y = x;
            y.at(a, 1) += 2;
            emit(std::move(y), Scalar(-1));
        }
        return;
    }

    int b = a + 1;
    if (cfg_.X == 'D') {
        // f_0 = -q_1^{m_1} q_2^{m'_2} q (a += e2, b += e1) + (a += e1, b += e2)
        {
            Mono dress = qj_pow_m(eps, 1, x.at(a, 1))
                             .mul(qj_pow_m(eps, 2, x.at(b, 2)))
                             .mul(q_pow_m(1))
                             .mul({twist ? 0 : 2, 0}); // overall -1, cancelled by the twist
            TensorState y = x;
            y.at(a, 2) += 1;
            y.at(b, 1) += 1;
            emit(std::move(y), dress.to_scalar());
        }
        {
            TensorState y = x;
            y.at(a, 1) += 1;
            y.at(b, 2) += 1;
            emit(std::move(y), Scalar(twist ? -1 : 1));
        }
    } else {
        // f_0 = -(a += e1, b += e1)
        TensorState y = x;
        y.at(a, 1) += 1;
        y.at(b, 1) += 1;
        emit(std::move(y), Scalar(-1));
    }
}

bool Engine::is_diagonal(const GenSym& sym) const {
    switch (sym.type) {
        case GenSym::Type::Knode:
        case GenSym::Type::Klat:
        case GenSym::Type::Sigma:
        case GenSym::Type::SlK: return true;
        default: return false;
    }
}

Scalar Engine::eigenvalue(const GenSym& sym, const TensorState& x) const {
    switch (sym.type) {
        case GenSym::Type::Knode: {
            long exp = sym.mu.empty() ? 1 : sym.mu[0];
            Mono acc;
            for (int b = 1; b <= cfg_.blocks(); ++b)
                acc = acc.mul(Impl::block_k_node(*this, sym.idx, x, b));
            if (exp < 0) acc = acc.inv();
            Mono out;
            for (long t = 0; t < std::abs(exp); ++t) out = out.mul(acc);
            return out.to_scalar();
        }
        case GenSym::Type::Klat: {
            Mono acc;
            for (int b = 1; b <= cfg_.blocks(); ++b) acc = acc.mul(Impl::block_k(*this, sym.mu, x, b));
            return acc.to_scalar();
        }
        case GenSym::Type::Sigma: {
            long occ = x.column_sum(sym.idx);
            return Scalar((cfg_.eps.at(sym.idx) * occ) % 2 == 0 ? 1 : -1);
        }
        case GenSym::Type::SlK: {
            long e = 0;
            for (int s = 1; s <= x.rows; ++s) e += sym.mu[static_cast<std::size_t>(s - 1)] * x.row_sum(s);
            return Scalar::q_power(static_cast<int>(e));
        }
        default: throw std::logic_error("eigenvalue: symbol is not diagonal");
    }
}

SparseVec Engine::apply(const GenSym& sym, const TensorState& x) const {
    SparseVec out;
    switch (sym.type) {
        case GenSym::Type::E: {
            std::vector<std::pair<TensorState, Scalar>> terms;
            Mono dress;
            for (int b = 1; b <= cfg_.blocks(); ++b) {
                terms.clear();
                block_e(sym.idx, x, b, terms);
                for (auto& [y, c] : terms) out.add(y, apply_mono(c, dress));
                if (b < cfg_.blocks()) dress = dress.mul(Impl::block_k_node(*this, sym.idx, x, b));
            }
            return out;
        }
        case GenSym::Type::F: {
            // suffix products of k^{-1} eigenvalues over the blocks after b
            std::vector<Mono> suffix(static_cast<std::size_t>(cfg_.blocks()) + 2);
            for (int b = cfg_.blocks(); b >= 1; --b)
                suffix[static_cast<std::size_t>(b)] =
                    suffix[static_cast<std::size_t>(b + 1)].mul(
                        Impl::block_k_node(*this, sym.idx, x, b).inv());
            std::vector<std::pair<TensorState, Scalar>> terms;
            for (int b = 1; b <= cfg_.blocks(); ++b) {
                terms.clear();
                block_f(sym.idx, x, b, terms);
                for (auto& [y, c] : terms)
                    out.add(y, apply_mono(c, suffix[static_cast<std::size_t>(b + 1)]));
            }
            return out;
        }
        case GenSym::Type::SlE: {
            int j = sym.idx;
            Mono dress;
            for (int t = 1; t <= cfg_.n(); ++t) {
                int mt = x.at(j + 1, t);
                if (mt > 0 && (cfg_.eps.at(t) == 0 || x.at(j, t) == 0)) {
                    TensorState y = x;
                    y.at(j, t) += 1;
                    y.at(j + 1, t) -= 1;
                    out.add(y, apply_mono(Scalar(quantum_int(mt)), dress));
                }
                dress = dress.mul(q_pow_m(x.at(j, t) - x.at(j + 1, t)));
            }
            return out;
        }
        case GenSym::Type::SlF: {
            int j = sym.idx;
            std::vector<Mono> suffix(static_cast<std::size_t>(cfg_.n()) + 2);
            for (int t = cfg_.n(); t >= 1; --t)
                suffix[static_cast<std::size_t>(t)] =
                    suffix[static_cast<std::size_t>(t + 1)].mul(
                        q_pow_m(-(x.at(j, t) - x.at(j + 1, t))));
            for (int t = 1; t <= cfg_.n(); ++t) {
                int mt = x.at(j, t);
                if (mt > 0 && (cfg_.eps.at(t) == 0 || x.at(j + 1, t) == 0)) {
                    TensorState y = x;
                    y.at(j, t) -= 1;
                    y.at(j + 1, t) += 1;
                    out.add(y, apply_mono(Scalar(quantum_int(mt)),
                                          suffix[static_cast<std::size_t>(t + 1)]));
                }
            }
            return out;
        }
        default: {
            Scalar c = eigenvalue(sym, x);
            out.add(x, c);
            return out;
        }
    }
}

DegInterval Engine::deg_shift(const GenSym& sym) const {
    if (sym.type == GenSym::Type::E && sym.idx == 0) return {-2, -2};
    if (sym.type == GenSym::Type::F && sym.idx == 0) return {2, 2};
    return {0, 0};
}

std::optional<Weight> Engine::weight_shift(const GenSym& sym) const {
    int n = cfg_.n();
    switch (sym.type) {
        case GenSym::Type::E: return Weight::alpha(n, sym.idx, cfg_.X);
        case GenSym::Type::F: return Weight::zero(n) - Weight::alpha(n, sym.idx, cfg_.X);
        case GenSym::Type::SlE:
        case GenSym::Type::SlF: return Weight::zero(n);
        default: return Weight::zero(n);
    }
}

LinOp Engine::op(const GenSym& sym) const {
    return LinOp{[this, sym](const TensorState& x) { return apply(sym, x); }, deg_shift(sym),
                 weight_shift(sym)};
}

} // namespace qhowe
