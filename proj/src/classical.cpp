#include "qhowe/classical.hpp"

#include <map>

namespace qhowe {

namespace {

// Limit operator on one degree slice: per source state, image entries with
// Gaussian-rational coefficients (the value of the exact entry at v = 1).
struct LimCol {
    std::vector<std::pair<TensorState, GaussianRational>> entries;
};
using LimOp = std::vector<LimCol>;

// Evaluate word on every state of the slice and specialize; reports the first
// non-regular entry through `bad`.
LimOp limit_matrix(WordEvaluator& ev, const WordPtr& w, const Slice& slice,
                   std::optional<Witness>& bad, const std::string& opname) {
    LimOp out(static_cast<std::size_t>(slice.dim()));
    for (int c = 0; c < slice.dim(); ++c) {
        const TensorState& s = slice.states[static_cast<std::size_t>(c)];
        const SparseVec& img = ev.eval(w, s);
        for (const auto& [t, coeff] : img.entries()) {
            try {
                GaussianRational val = coeff.eval_at_one();
                if (!val.is_zero()) out[static_cast<std::size_t>(c)].entries.push_back({t, val});
            } catch (const PoleAtOne&) {
                if (!bad) bad = Witness{s.str(), opname, to_string(coeff), t.str()};
            }
        }
    }
    return out;
}

LimOp lim_apply(const LimOp& later, const Slice& mid, const LimOp& first) {
    // (later ∘ first): first maps the source slice into `mid`, later acts on mid
    LimOp out(first.size());
    for (std::size_t c = 0; c < first.size(); ++c) {
        std::map<TensorState, GaussianRational> acc;
        for (const auto& [t, v] : first[c].entries) {
            int ti = mid.index_of(t);
            if (ti < 0) continue;
            for (const auto& [u, w] : later[static_cast<std::size_t>(ti)].entries) acc[u] += v * w;
        }
        for (const auto& [u, w] : acc)
            if (!w.is_zero()) out[c].entries.push_back({u, w});
    }
    return out;
}

LimOp lim_axpy(LimOp a, const GaussianRational& c, const LimOp& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::map<TensorState, GaussianRational> acc;
        for (const auto& [t, v] : a[i].entries) acc[t] += v;
        for (const auto& [t, v] : b[i].entries) acc[t] += c * v;
        a[i].entries.clear();
        for (const auto& [t, v] : acc)
            if (!v.is_zero()) a[i].entries.push_back({t, v});
    }
    return a;
}

bool lim_is_zero(const LimOp& a) {
    for (const auto& col : a)
        if (!col.entries.empty()) return false;
    return true;
}

} // namespace

std::vector<std::pair<std::string, LinOp>> tau_sigma_ops(const ModuleConfig& cfg) {
    auto eng = std::make_shared<const Engine>(cfg);
    TauOps tau = tau_operators(cfg);
    std::vector<std::pair<std::string, LinOp>> out;
    for (int j = 1; j <= cfg.n(); ++j)
        out.push_back({"sigma" + std::to_string(j), word_op(eng, sigma_word(j))});
    for (int i = 0; i < cfg.n(); ++i) {
        out.push_back({"tauE" + std::to_string(i), word_op(eng, tau.E[static_cast<std::size_t>(i)])});
        out.push_back({"tauF" + std::to_string(i), word_op(eng, tau.F[static_cast<std::size_t>(i)])});
        out.push_back({"tauK" + std::to_string(i), word_op(eng, tau.K[static_cast<std::size_t>(i)])});
    }
    return out;
}

Report classical_limit_check(const ModuleConfig& cfg, int D, int /*jobs*/) {
    Engine eng(cfg);
    WordEvaluator ev(eng);
    const int n = cfg.n();
    TauOps tau = tau_operators(cfg);

    Report rep;
    rep.suite = "classical-limit";
    rep.config = {{"type", std::string(1, cfg.X)},
                  {"epsilon", cfg.eps.str()},
                  {"module", cfg.kind_str()},
                  {"ell", std::to_string(cfg.ell)},
                  {"maxDegree", std::to_string(D)},
                  {"psiTwist", cfg.psiTwist ? "true" : "false"}};
    // untwisted type D is a comparative run: outcomes recorded, not asserted
    bool comparative = (cfg.X == 'D' && !cfg.psiTwist);
    auto status_of = [&](bool good) {
        if (comparative) return Status::Info;
        return good ? Status::Pass : Status::Fail;
    };

    std::vector<SlicePtr> slices;
    for (int d = 0; d <= D + 2; ++d)
        slices.push_back(SliceCache::global().get(cfg.eps, cfg.factors(), d));

    // limit matrices per node and degree; E_i: d -> d or d-2, F_i: d -> d or d+2
    auto deg_to = [&](int i, bool isF, int d) { return i == 0 ? (isF ? d + 2 : d - 2) : d; };
    std::vector<std::vector<LimOp>> E(static_cast<std::size_t>(n)), F(static_cast<std::size_t>(n));
    std::vector<std::vector<std::vector<GaussianRational>>> H(static_cast<std::size_t>(n));

    for (int i = 0; i < n; ++i) {
        std::optional<Witness> bad;
        E[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(D + 3));
        F[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(D + 3));
        for (int d = 0; d <= D + 2; ++d) {
            E[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] = limit_matrix(
                ev, tau.E[static_cast<std::size_t>(i)], *slices[static_cast<std::size_t>(d)], bad,
                "tauE" + std::to_string(i));
            if (d <= D)
                F[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] = limit_matrix(
                    ev, tau.F[static_cast<std::size_t>(i)], *slices[static_cast<std::size_t>(d)],
                    bad, "tauF" + std::to_string(i));
        }
        ev.clear();
        ReportItem reg;
        reg.name = "regular[node " + std::to_string(i) + "]";
        reg.status = status_of(!bad);
        reg.witness = bad;
        rep.add(std::move(reg));

        // H_i from the diagonal tau(K_i)
        LaurentPoly div = (cfg.X == 'C' && i == 0)
                              ? LaurentPoly::q_power(2) - LaurentPoly::q_power(-2)
                              : LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
        ReportItem hit;
        hit.name = "cartan_limit[node " + std::to_string(i) + "]";
        hit.status = status_of(true);
        H[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(D + 3));
        for (int d = 0; d <= D + 2; ++d) {
            const Slice& sl = *slices[static_cast<std::size_t>(d)];
            auto& Hd = H[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
            Hd.resize(static_cast<std::size_t>(sl.dim()));
            for (int c = 0; c < sl.dim(); ++c) {
                const TensorState& s = sl.states[static_cast<std::size_t>(c)];
                const SparseVec& kv = ev.eval(tau.K[static_cast<std::size_t>(i)], s);
                Scalar kval = kv.coeff(s);
                if (kv.size() != 1 || kval.is_zero()) {
                    hit.status = status_of(false);
                    hit.witness = Witness{s.str(), "tauK" + std::to_string(i), "not diagonal", s.str()};
                    break;
                }
                Scalar h = (kval - kval.inverse()) * Scalar(LaurentPoly(1), div);
                try {
                    GaussianRational hv = h.eval_at_one();
                    if (!(hv.im == 0 && (hv.re.get_den() == 1 || hv.re.get_den() == 2))) {
                        hit.status = status_of(false);
                        hit.witness = Witness{s.str(), "H" + std::to_string(i), to_string(h), s.str()};
                        break;
                    }
                    Hd[static_cast<std::size_t>(c)] = hv;
                } catch (const PoleAtOne&) {
                    hit.status = status_of(false);
                    hit.witness = Witness{s.str(), "H" + std::to_string(i), to_string(h), s.str()};
                    break;
                }
            }
            if (hit.status == Status::Fail) break;
        }
        ev.clear();
        rep.add(std::move(hit));
    }

    // (c) supercommutators of the limit matrices on slices <= D
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ReportItem item;
            item.name = "supercomm[E" + std::to_string(i) + ",F" + std::to_string(j) + "]";
            item.status = status_of(true);
            int sgn = (tau.parity[static_cast<std::size_t>(i)] *
                       tau.parity[static_cast<std::size_t>(j)]) %
                              2 ==
                          0
                          ? 1
                          : -1;
            for (int d = 0; d <= D; ++d) {
                int dj = deg_to(j, true, d);   // F_j: d -> dj
                int di = deg_to(i, false, dj); // E_i then maps dj -> di
                if (dj < 0 || dj > D + 2 || di < 0) continue;
                const Slice& src = *slices[static_cast<std::size_t>(d)];
                const Slice& mid = *slices[static_cast<std::size_t>(dj)];
                LimOp ef = lim_apply(E[static_cast<std::size_t>(i)][static_cast<std::size_t>(dj)],
                                     mid, F[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)]);
                // F_j E_i: E_i maps d -> de, then F_j maps de -> di
                int de = deg_to(i, false, d);
                LimOp fe;
                if (de >= 0) {
                    const Slice& mid2 = *slices[static_cast<std::size_t>(de)];
                    fe = lim_apply(F[static_cast<std::size_t>(j)][static_cast<std::size_t>(de)],
                                   mid2, E[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]);
                } else {
                    fe.resize(static_cast<std::size_t>(src.dim()));
                }
                LimOp comm = lim_axpy(std::move(ef), GaussianRational(-sgn), fe);
                if (i == j) {
                    // subtract (-1)^{eps(i)} H_i
                    int epsi = (i == 0) ? cfg.eps.at(1) : cfg.eps.at(i);
                    GaussianRational c(epsi == 0 ? -1 : 1);
                    LimOp hterm(static_cast<std::size_t>(src.dim()));
                    for (int col = 0; col < src.dim(); ++col) {
                        GaussianRational hv =
                            H[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]
                             [static_cast<std::size_t>(col)];
                        if (!hv.is_zero())
                            hterm[static_cast<std::size_t>(col)].entries.push_back(
                                {src.states[static_cast<std::size_t>(col)], hv});
                    }
                    comm = lim_axpy(std::move(comm), c, hterm);
                }
                if (!lim_is_zero(comm)) {
                    for (std::size_t col = 0; col < comm.size(); ++col)
                        if (!comm[col].entries.empty()) {
                            item.status = status_of(false);
                            item.witness = Witness{src.states[col].str(),
                                                   item.name,
                                                   to_string(comm[col].entries.front().second) +
                                                       "*v^0",
                                                   comm[col].entries.front().first.str()};
                            break;
                        }
                    break;
                }
            }
            rep.add(std::move(item));
        }

    // (d) limit squares vanish at odd nodes
    for (int i = 0; i < n; ++i) {
        if (tau.parity[static_cast<std::size_t>(i)] == 0) continue;
        ReportItem item;
        item.name = "square_limit[node " + std::to_string(i) + "]";
        item.status = status_of(true);
        for (int d = 0; d <= D; ++d) {
            int de = deg_to(i, false, d);
            if (de >= 0) {
                LimOp ee = lim_apply(E[static_cast<std::size_t>(i)][static_cast<std::size_t>(de)],
                                     *slices[static_cast<std::size_t>(de)],
                                     E[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]);
                if (!lim_is_zero(ee)) {
                    item.status = status_of(false);
                    break;
                }
            }
            int df = deg_to(i, true, d);
            if (df <= D + 2 && df >= 0 && deg_to(i, true, df) <= D + 2) {
                // square of F only where both steps stay materialized
                if (deg_to(i, true, df) <= D + 2 && df <= D) {
                    LimOp ff = lim_apply(F[static_cast<std::size_t>(i)][static_cast<std::size_t>(df)],
                                         *slices[static_cast<std::size_t>(df)],
                                         F[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]);
                    if (!lim_is_zero(ff)) {
                        item.status = status_of(false);
                        break;
                    }
                }
            }
        }
        rep.add(std::move(item));
    }

    return rep;
}

} // namespace qhowe
