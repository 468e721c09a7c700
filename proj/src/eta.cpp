#include "qhowe/eta.hpp"

#include <map>

#include "qhowe/parallel.hpp"

namespace qhowe {

namespace {

using W = WordExpr;

WordPtr ew(int i) { return W::gen(GenSym::e(i)); }
WordPtr fw(int i) { return W::gen(GenSym::f(i)); }
WordPtr kw(int i, int exp = 1) { return W::gen(GenSym::k_node(i, exp)); }

} // namespace

EtaKind eta_for(const ModuleConfig& cfg) {
    if (cfg.X == 'D') return EtaKind::D;
    return cfg.kind == ModuleKind::W ? EtaKind::C : EtaKind::CPrime;
}

WordPtr eta_of_e(EtaKind kind, const ModuleConfig& cfg, int i) {
    if (i != 0) {
        Scalar c = q_sub(cfg.eps.at(i)).inverse();
        return W::scale(c, W::prod(fw(i), kw(i)));
    }
    int e1 = cfg.eps.at(1);
    Scalar c;
    switch (kind) {
        case EtaKind::D:
            c = Scalar(e1 == 0 ? -1 : 1) * q_sub_power(e1, e1 == 0 ? 1 : -1);
            break;
        case EtaKind::C: {
            LaurentPoly b2 = quantum_int(2);
            c = -Scalar(LaurentPoly(1), b2 * b2);
            break;
        }
        case EtaKind::CPrime: c = -Scalar::q_power(2); break;
    }
    return W::scale(c, W::prod(fw(0), kw(0)));
}

WordPtr eta_of_f(EtaKind kind, const ModuleConfig& cfg, int i) {
    if (i != 0) {
        Scalar c = q_sub(cfg.eps.at(i));
        return W::scale(c, W::prod(kw(i, -1), ew(i)));
    }
    int e1 = cfg.eps.at(1);
    Scalar c;
    switch (kind) {
        case EtaKind::D:
            c = Scalar(e1 == 0 ? -1 : 1) * q_sub_power(e1, e1 == 0 ? -1 : 1);
            break;
        case EtaKind::C: {
            LaurentPoly b2 = quantum_int(2);
            c = -Scalar(b2 * b2);
            break;
        }
        case EtaKind::CPrime: c = -Scalar::q_power(-2); break;
    }
    return W::scale(c, W::prod(kw(0, -1), ew(0)));
}

namespace {

struct AdjointPair {
    std::string name;
    WordPtr x;
    WordPtr eta_x;
};

std::vector<AdjointPair> adjoint_pairs(EtaKind kind, const ModuleConfig& cfg) {
    std::vector<AdjointPair> out;
    for (int i = 0; i < cfg.n(); ++i) {
        out.push_back({"e" + std::to_string(i), ew(i), eta_of_e(kind, cfg, i)});
        out.push_back({"f" + std::to_string(i), fw(i), eta_of_f(kind, cfg, i)});
        out.push_back({"k" + std::to_string(i), kw(i), kw(i)});
    }
    for (int j = 1; j <= cfg.n(); ++j) {
        std::vector<long> mu(static_cast<std::size_t>(cfg.n()), 0);
        mu[static_cast<std::size_t>(j - 1)] = 1;
        WordPtr kd = W::gen(GenSym::k_lat(mu));
        out.push_back({"kdelta" + std::to_string(j), kd, kd});
    }
    return out;
}

} // namespace

Report eta_adjoint_check(const ModuleConfig& cfg, EtaKind kind, int D, int jobs) {
    Engine eng(cfg);
    Report rep;
    rep.suite = "polarization";
    rep.config = {{"type", std::string(1, cfg.X)},
                  {"epsilon", cfg.eps.str()},
                  {"module", cfg.kind_str()},
                  {"ell", std::to_string(cfg.ell)},
                  {"maxDegree", std::to_string(D)}};

    std::vector<AdjointPair> pairs = adjoint_pairs(kind, cfg);
    std::vector<ReportItem> items(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t idx) {
        const AdjointPair& p = pairs[idx];
        Engine local(cfg);
        WordEvaluator ev(local);
        WordShape sh = WordShape::of(p.x, local);
        ReportItem item = pass_item("adjoint[" + p.name + "]");
        for (int d = 0; d <= D && item.status == Status::Pass; ++d) {
            int dt = d + sh.shift.lo; // x maps degree d into degree dt
            if (dt < 0) continue;
            SlicePtr src = SliceCache::global().get(cfg.eps, cfg.factors(), d);
            SlicePtr dst = SliceCache::global().get(cfg.eps, cfg.factors(), dt);
            // A[w][v]: coefficient of w in x.v ; B[v][w]: coefficient of v in eta(x).w
            std::vector<SparseVec> xcols(static_cast<std::size_t>(src->dim()));
            for (int c = 0; c < src->dim(); ++c)
                xcols[static_cast<std::size_t>(c)] =
                    ev.eval(p.x, src->states[static_cast<std::size_t>(c)]);
            std::vector<SparseVec> ecols(static_cast<std::size_t>(dst->dim()));
            for (int c = 0; c < dst->dim(); ++c)
                ecols[static_cast<std::size_t>(c)] =
                    ev.eval(p.eta_x, dst->states[static_cast<std::size_t>(c)]);
            ev.clear();
            auto check = [&](int vi, int wi) {
                const TensorState& v = src->states[static_cast<std::size_t>(vi)];
                const TensorState& w = dst->states[static_cast<std::size_t>(wi)];
                Scalar lhs = xcols[static_cast<std::size_t>(vi)].coeff(w) * state_norm(w);
                Scalar rhs = ecols[static_cast<std::size_t>(wi)].coeff(v) * state_norm(v);
                if (lhs != rhs) {
                    item = fail_item(
                        "adjoint[" + p.name + "]",
                        Witness{v.str(), p.name, to_string(lhs - rhs), w.str()});
                    return false;
                }
                return true;
            };
            for (int vi = 0; vi < src->dim() && item.status == Status::Pass; ++vi)
                for (const auto& [w, c] : xcols[static_cast<std::size_t>(vi)].entries()) {
                    int wi = dst->index_of(w);
                    if (wi < 0 || !check(vi, wi)) {
                        if (wi < 0)
                            item = fail_item("adjoint[" + p.name + "]",
                                             Witness{src->states[static_cast<std::size_t>(vi)].str(),
                                                     p.name, to_string(c), w.str()});
                        break;
                    }
                }
            for (int wi = 0; wi < dst->dim() && item.status == Status::Pass; ++wi)
                for (const auto& [v, c] : ecols[static_cast<std::size_t>(wi)].entries()) {
                    int vi = src->index_of(v);
                    if (vi < 0 || !check(vi, wi)) {
                        if (vi < 0)
                            item = fail_item("adjoint[" + p.name + "]",
                                             Witness{dst->states[static_cast<std::size_t>(wi)].str(),
                                                     "eta(" + p.name + ")", to_string(c), v.str()});
                        break;
                    }
                }
        }
        items[idx] = std::move(item);
    });
    for (auto& it : items) rep.add(std::move(it));

    // Gram diagonal nonzero through degree D
    for (int d = 0; d <= D; ++d) {
        SlicePtr slice = SliceCache::global().get(cfg.eps, cfg.factors(), d);
        ReportItem item = pass_item("gram[d=" + std::to_string(d) + "]");
        for (const auto& s : slice->states) {
            Scalar nrm = state_norm(s);
            if (nrm.is_zero()) {
                item = fail_item(item.name, Witness{s.str(), "norm", "0*v^0", s.str()});
                break;
            }
        }
        item.values.push_back({"dim", std::to_string(slice->dim())});
        rep.add(std::move(item));
    }
    return rep;
}

Report eta_adjoint_check(const ModuleConfig& cfg, int D, int jobs) {
    return eta_adjoint_check(cfg, eta_for(cfg), D, jobs);
}

} // namespace qhowe
