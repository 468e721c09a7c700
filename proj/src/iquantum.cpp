#include "qhowe/iquantum.hpp"

#include <map>

#include "qhowe/parallel.hpp"

namespace qhowe {

namespace {

using W = WordExpr;

WordPtr se(int j) { return W::gen(GenSym::sl_e(j)); }
WordPtr sf(int j) { return W::gen(GenSym::sl_f(j)); }
WordPtr sk(int j, int r, long mult = 1) { return W::gen(GenSym::sl_k_alpha(j, r, mult)); }

} // namespace

IqgFamily iqg_family_for(const ModuleConfig& cfg) {
    return cfg.kind == ModuleKind::W ? IqgFamily::AI : IqgFamily::AII;
}

std::vector<int> iqg_circ_nodes(IqgFamily fam, int ell) {
    std::vector<int> out;
    if (fam == IqgFamily::AI) {
        for (int i = 1; i <= ell - 1; ++i) out.push_back(i);
    } else {
        for (int i = 2; i <= 2 * ell - 2; i += 2) out.push_back(i);
    }
    return out;
}

std::vector<int> iqg_bullet_nodes(IqgFamily fam, int ell) {
    std::vector<int> out;
    if (fam == IqgFamily::AII)
        for (int i = 1; i <= 2 * ell - 1; i += 2) out.push_back(i);
    return out;
}

IqgParams IqgParams::defaults(IqgFamily fam, int ell) {
    Scalar vs = fam == IqgFamily::AI ? -Scalar::q_power(-1) : -Scalar::q_power(1);
    return uniform(fam, ell, vs, Scalar(0));
}

IqgParams IqgParams::uniform(IqgFamily fam, int ell, const Scalar& varsigma, const Scalar& kappa) {
    IqgParams p;
    p.family = fam;
    for (int i : iqg_circ_nodes(fam, ell)) {
        p.varsigma[i] = varsigma;
        p.kappa[i] = kappa;
    }
    return p;
}

Scalar bar(const Scalar& s) {
    auto flip = [](const LaurentPoly& p) {
        std::vector<LaurentPoly::Term> t;
        for (const auto& [e, c] : p.terms()) t.push_back({-e, c});
        std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return LaurentPoly::from_terms(std::move(t));
    };
    return Scalar(flip(s.num()), flip(s.den()));
}

WordPtr braid_image_word(int i) {
    WordPtr inner = W::bracket(se(i - 1), se(i), Scalar::q_power(-1));
    return W::bracket(se(i + 1), inner, Scalar::q_power(-1));
}

WordPtr build_Bi(const ModuleConfig& cfg, const IqgParams& params, int i) {
    int r = cfg.factors();
    auto circ = iqg_circ_nodes(params.family, cfg.ell);
    if (std::find(circ.begin(), circ.end(), i) == circ.end())
        throw ConfigError("build_Bi: node " + std::to_string(i) + " is not in I_circ");
    Scalar vs = params.varsigma.at(i);
    Scalar kp = params.kappa.count(i) ? params.kappa.at(i) : Scalar(0);
    std::vector<std::pair<Scalar, WordPtr>> terms;
    terms.push_back({Scalar(1), sf(i)});
    if (params.family == IqgFamily::AI) {
        terms.push_back({vs, W::prod(se(i), sk(i, r, -1))});
    } else {
        terms.push_back({vs, W::prod(braid_image_word(i), sk(i, r, -1))});
    }
    if (!kp.is_zero()) terms.push_back({kp, sk(i, r, -1)});
    return W::sum(std::move(terms));
}

std::vector<std::pair<std::string, WordPtr>> iqg_generators(const ModuleConfig& cfg,
                                                            const IqgParams& params) {
    std::vector<std::pair<std::string, WordPtr>> out;
    int r = cfg.factors();
    for (int i : iqg_circ_nodes(params.family, cfg.ell))
        out.push_back({"B" + std::to_string(i), build_Bi(cfg, params, i)});
    for (int j : iqg_bullet_nodes(params.family, cfg.ell)) {
        out.push_back({"E" + std::to_string(j), se(j)});
        out.push_back({"F" + std::to_string(j), sf(j)});
        out.push_back({"K" + std::to_string(j), sk(j, r)});
    }
    return out;
}

namespace {

// (alpha_i | alpha_j) in the sl_r root lattice
long sl_form(int i, int j) {
    if (i == j) return 2;
    if (std::abs(i - j) == 1) return -1;
    return 0;
}

} // namespace

Report validate_params(const ModuleConfig& cfg, const IqgParams& params) {
    Report rep;
    rep.suite = "params";
    rep.config = {{"family", params.family == IqgFamily::AI ? "AI" : "AII"},
                  {"ell", std::to_string(cfg.ell)}};
    auto circ = iqg_circ_nodes(params.family, cfg.ell);
    auto bullet = iqg_bullet_nodes(params.family, cfg.ell);

    for (int i : circ) {
        const Scalar& vs = params.varsigma.at(i);
        Scalar kp = params.kappa.count(i) ? params.kappa.at(i) : Scalar(0);

        // condition (2): varsigma_i^2 = (-1)^{(2rho.|a_i)} q^{-(a_i | 2rho. + w.(a_i))}
        long rho_pair = 0, w_pair = 0;
        for (int j : bullet) rho_pair += sl_form(j, i);
        // w_bullet(alpha_i) = alpha_i + sum of adjacent bullet alphas
        w_pair = sl_form(i, i);
        for (int j : bullet)
            if (std::abs(j - i) == 1) w_pair += sl_form(i, j);
        long expo = -(rho_pair + w_pair);
        Scalar target = Scalar::q_power(static_cast<int>(expo));
        if (rho_pair % 2 != 0) target = -target;
        ReportItem c2;
        c2.name = "admissible_varsigma[" + std::to_string(i) + "]";
        c2.status = (vs * vs == target) ? Status::Pass : Status::Fail;
        c2.values.push_back({"varsigma", to_string(vs)});
        c2.values.push_back({"required_square", to_string(target)});
        rep.add(std::move(c2));

        // condition (3): bar(kappa) = kappa
        ReportItem c3;
        c3.name = "kappa_bar_invariant[" + std::to_string(i) + "]";
        c3.status = (bar(kp) == kp) ? Status::Pass : Status::Fail;
        rep.add(std::move(c3));

        // condition (4): kappa = 0 when a bullet node is adjacent
        if (params.family == IqgFamily::AII) {
            ReportItem c4;
            c4.name = "kappa_zero[" + std::to_string(i) + "]";
            c4.status = kp.is_zero() ? Status::Pass : Status::Fail;
            rep.add(std::move(c4));
        }

        // specializability: varsigma in A with varsigma(1) = -1
        ReportItem sp;
        sp.name = "specializable_varsigma[" + std::to_string(i) + "]";
        try {
            GaussianRational v1 = vs.eval_at_one();
            sp.status = (v1 == GaussianRational(-1)) ? Status::Pass : Status::Fail;
            sp.values.push_back({"value_at_one", to_string(v1)});
        } catch (const PoleAtOne&) {
            sp.status = Status::Fail;
            sp.values.push_back({"value_at_one", "pole"});
        }
        rep.add(std::move(sp));
    }
    return rep;
}

Report commutant_check(const ModuleConfig& cfg, const IqgParams& params, int D, int jobs) {
    if (D < 2) throw TruncationUnsafe("commutant_check: need D >= 2");
    Engine eng(cfg);
    const int n = cfg.n();
    const int r = cfg.factors();

    Report rep;
    rep.suite = "commutant";
    rep.config = {{"type", std::string(1, cfg.X)},
                  {"epsilon", cfg.eps.str()},
                  {"module", cfg.kind_str()},
                  {"ell", std::to_string(cfg.ell)},
                  {"family", params.family == IqgFamily::AI ? "AI" : "AII"},
                  {"maxDegree", std::to_string(D)}};
    for (const auto& [i, vs] : params.varsigma)
        rep.config.push_back({"varsigma" + std::to_string(i), to_string(vs)});

    // x side: U_A generators for the sl_r part, all of U_X for the coideal part
    std::vector<std::pair<std::string, WordPtr>> xA, xAll;
    for (int i = 0; i < n; ++i) {
        auto ew = W::gen(GenSym::e(i));
        auto fw = W::gen(GenSym::f(i));
        auto kw = W::gen(GenSym::k_node(i));
        if (i != 0) {
            xA.push_back({"e" + std::to_string(i), ew});
            xA.push_back({"f" + std::to_string(i), fw});
        }
        xA.push_back({"k" + std::to_string(i), kw});
        xAll.push_back({"e" + std::to_string(i), ew});
        xAll.push_back({"f" + std::to_string(i), fw});
        xAll.push_back({"k" + std::to_string(i), kw});
    }

    std::vector<std::pair<std::string, WordPtr>> yFull; // all sl_r generators (Prop 4.1)
    for (int j = 1; j <= r - 1; ++j) {
        yFull.push_back({"E" + std::to_string(j), se(j)});
        yFull.push_back({"F" + std::to_string(j), sf(j)});
        yFull.push_back({"K" + std::to_string(j), sk(j, r)});
    }
    std::vector<std::pair<std::string, WordPtr>> yIqg = iqg_generators(cfg, params);

    struct Task {
        std::string name;
        WordPtr comm;
    };
    std::vector<Task> tasks;
    for (const auto& [xn, xw] : xA)
        for (const auto& [yn, yw] : yFull)
            tasks.push_back({"typeA[" + xn + "," + yn + "]",
                             W::sub(W::prod(xw, yw), W::prod(yw, xw))});
    for (const auto& [xn, xw] : xAll)
        for (const auto& [yn, yw] : yIqg)
            tasks.push_back({"coideal[" + xn + "," + yn + "]",
                             W::sub(W::prod(xw, yw), W::prod(yw, xw))});

    std::vector<ReportItem> items(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t idx) {
        const Task& task = tasks[idx];
        Engine local(cfg);
        WordEvaluator ev(local);
        ReportItem item = pass_item(task.name);
        for (int d = 0; d <= D - 2 && item.status == Status::Pass; ++d) {
            SlicePtr slice = SliceCache::global().get(cfg.eps, cfg.factors(), d);
            std::map<Weight, std::vector<const TensorState*>> groups;
            for (const auto& s : slice->states) groups[state_weight(s)].push_back(&s);
            for (const auto& [w, states] : groups) {
                ev.clear();
                for (const TensorState* s : states) {
                    const SparseVec& res = ev.eval(task.comm, *s);
                    if (!res.is_zero()) {
                        const auto& [ts, c] = *res.entries().begin();
                        item = fail_item(task.name, Witness{s->str(), task.name, to_string(c), ts.str()});
                        break;
                    }
                }
                if (item.status != Status::Pass) break;
            }
        }
        ev.clear();
        items[idx] = std::move(item);
    });
    for (auto& it : items) rep.add(std::move(it));
    return rep;
}

} // namespace qhowe
