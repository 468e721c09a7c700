#include "qhowe/relations.hpp"

#include <algorithm>
#include <map>

#include "qhowe/parallel.hpp"

namespace qhowe {

namespace {

using W = WordExpr;

WordPtr e(int i) { return W::gen(GenSym::e(i)); }
WordPtr f(int i) { return W::gen(GenSym::f(i)); }
WordPtr k(int i, int exp = 1) { return W::gen(GenSym::k_node(i, exp)); }

Scalar bracket2() { return Scalar(quantum_int(2)); }

long form_pair(const Epsilon& eps, const std::vector<long>& u, const std::vector<long>& v) {
    long acc = 0;
    for (int t = 1; t <= eps.n(); ++t)
        acc += eps.sign_at(t) * u[static_cast<std::size_t>(t - 1)] * v[static_cast<std::size_t>(t - 1)];
    return acc;
}

// e_i^2 e_j - sign [2] e_i e_j e_i + e_j e_i^2, built from leaves a=e_i, b=e_j
WordPtr serre_word(const WordPtr& a, const WordPtr& b, const Scalar& middle) {
    return W::sum({{Scalar(1), W::prod({a, a, b})},
                   {-middle, W::prod({a, b, a})},
                   {Scalar(1), W::prod({b, a, a})}});
}

void add_pair(std::vector<Relation>& out, const std::string& base,
              const std::function<WordPtr(bool)>& make) {
    out.push_back({base + "/e", make(false)});
    out.push_back({base + "/f", make(true)});
}

std::vector<Relation> catalog_impl(char X, const Epsilon& eps, bool mutate) {
    const int n = eps.n();
    std::vector<Relation> out;
    auto ev = [&](int i) { return alpha_vector(n, i, X); };

    // k_mu x k_{-mu} = q(mu, alpha_i)^{+-1} x for mu in {alpha_j} u {delta_j}
    for (int i = 0; i < n; ++i) {
        std::vector<long> ai = ev(i);
        for (int j = 0; j < n; ++j) {
            std::vector<long> mu = ev(j);
            Scalar c = bq(mu, ai, eps.bits);
            out.push_back({"kconj[k" + std::to_string(j) + ",e" + std::to_string(i) + "]",
                           W::sub(W::prod({k(j), e(i), k(j, -1)}), W::scale(c, e(i)))});
            out.push_back({"kconj[k" + std::to_string(j) + ",f" + std::to_string(i) + "]",
                           W::sub(W::prod({k(j), f(i), k(j, -1)}), W::scale(c.inverse(), f(i)))});
        }
        for (int j = 1; j <= n; ++j) {
            std::vector<long> mu(static_cast<std::size_t>(n), 0);
            mu[static_cast<std::size_t>(j - 1)] = 1;
            Scalar c = bq(mu, ai, eps.bits);
            WordPtr kd = W::gen(GenSym::k_lat(mu));
            WordPtr kdi = W::gen(GenSym::k_lat_inv(mu));
            out.push_back({"kconj[kdelta" + std::to_string(j) + ",e" + std::to_string(i) + "]",
                           W::sub(W::prod({kd, e(i), kdi}), W::scale(c, e(i)))});
            out.push_back({"kconj[kdelta" + std::to_string(j) + ",f" + std::to_string(i) + "]",
                           W::sub(W::prod({kd, f(i), kdi}), W::scale(c.inverse(), f(i)))});
        }
    }

    // e_i f_j - f_j e_i = delta_ij (k_i - k_i^{-1}) / (q - q^{-1})
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            WordPtr lhs = W::sub(W::prod(e(i), f(j)), W::prod(f(j), e(i)));
            if (i == j) {
                LaurentPoly div = (X == 'C' && i == 0)
                                      ? LaurentPoly::q_power(2) - LaurentPoly::q_power(-2)
                                      : LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
                Scalar c = Scalar(LaurentPoly(1), div);
                lhs = W::sum({{Scalar(1), lhs}, {-c, k(i)}, {c, k(i, -1)}});
            }
            out.push_back({"cartan[e" + std::to_string(i) + ",f" + std::to_string(j) + "]", lhs});
        }

    // [e_i, e_j] = [f_i, f_j] = 0 when (alpha_i | alpha_j) = 0
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (form_pair(eps, ev(i), ev(j)) == 0) {
                std::string nm = std::to_string(i) + "," + std::to_string(j);
                add_pair(out, "commute[" + nm + "]", [&](bool ff) {
                    auto g = ff ? f : e;
                    return W::sub(W::prod(g(i), g(j)), W::prod(g(j), g(i)));
                });
            }

    // e_i^2 = f_i^2 = 0 for odd nodes
    for (int i = 0; i < n; ++i)
        if (node_parity(X, eps, i) == 1) {
            out.push_back({"square[e" + std::to_string(i) + "]", W::prod(e(i), e(i))});
            out.push_back({"square[f" + std::to_string(i) + "]", W::prod(f(i), f(i))});
        }

    // quantum Serre at even nodes i >= 1 against neighbours j >= 1
    bool mutated_done = false;
    for (int i = 1; i < n; ++i) {
        if (eps.at(i) != eps.at(i + 1)) continue;
        Scalar middle = Scalar(eps.at(i) == 0 ? 1 : -1) * bracket2();
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j >= n) continue;
            Scalar use = middle;
            std::string tag;
            if (mutate && !mutated_done && eps.at(i) == 1) {
                use = -middle; // drop the (-1)^{eps_i} sign
                tag = "[mutated]";
                mutated_done = true;
            }
            std::string nm = std::to_string(i) + ";" + std::to_string(j) + "]" + tag;
            out.push_back({"serre_e[" + nm, serre_word(e(i), e(j), use)});
            out.push_back({"serre_f[" + nm, serre_word(f(i), f(j), use)});
        }
    }
    if (mutate && !mutated_done)
        throw ConfigError("mutated_catalog: no Serre node with eps_i = eps_{i+1} = 1");

    // odd-node quartic, i in 2..n-2 with eps_i != eps_{i+1}
    for (int i = 2; i <= n - 2; ++i) {
        if (eps.at(i) == eps.at(i + 1)) continue;
        Scalar sgn = Scalar(eps.at(i) == 0 ? 1 : -1) * bracket2();
        add_pair(out, "quartic[" + std::to_string(i) + "]", [&](bool ff) {
            auto g = ff ? f : e;
            WordPtr a = g(i - 1), b = g(i), c = g(i + 1);
            return W::sum({{Scalar(1), W::prod({b, a, b, c})},
                           {Scalar(-1), W::prod({b, c, b, a})},
                           {sgn, W::prod({b, a, c, b})},
                           {Scalar(-1), W::prod({a, b, c, b})},
                           {Scalar(1), W::prod({c, b, a, b})}});
        });
    }

    if (X == 'D') {
        if (eps.at(1) == eps.at(2)) {
            Scalar mid = Scalar(eps.at(2) == 0 ? 1 : -1) * bracket2();
            add_pair(out, "serre0[0;2]", [&](bool ff) {
                auto g = ff ? f : e;
                return serre_word(g(0), g(2), mid);
            });
        }
        if (eps.at(2) == eps.at(3)) {
            Scalar mid = Scalar(eps.at(2) == 0 ? 1 : -1) * bracket2();
            add_pair(out, "serre0[2;0]", [&](bool ff) {
                auto g = ff ? f : e;
                return serre_word(g(2), g(0), mid);
            });
        }
        if (eps.at(1) != eps.at(2)) {
            Scalar sgn = Scalar(eps.at(2) == 0 ? 1 : -1) * bracket2();
            add_pair(out, "cubic012", [&](bool ff) {
                auto g = ff ? f : e;
                WordPtr g0 = g(0), g1 = g(1), g2 = g(2);
                return W::sum({{Scalar(1), W::prod({g0, g1, g2})},
                               {Scalar(-1), W::prod({g1, g0, g2})},
                               {sgn, W::prod({g1, g2, g0})},
                               {-sgn, W::prod({g0, g2, g1})},
                               {Scalar(1), W::prod({g2, g0, g1})},
                               {Scalar(-1), W::prod({g2, g1, g0})}});
            });
        }
        if (eps.at(2) != eps.at(3)) {
            Scalar sgn = Scalar(eps.at(3) == 0 ? 1 : -1) * bracket2();
            add_pair(out, "quartic023", [&](bool ff) {
                auto g = ff ? f : e;
                WordPtr g0 = g(0), g2 = g(2), g3 = g(3);
                return W::sum({{Scalar(1), W::prod({g0, g2, g3, g2})},
                               {Scalar(-1), W::prod({g3, g2, g0, g2})},
                               {sgn, W::prod({g2, g3, g0, g2})},
                               {Scalar(-1), W::prod({g2, g0, g2, g3})},
                               {Scalar(1), W::prod({g2, g3, g2, g0})}});
            });
        }
    } else {
        // X = C
        Scalar qq = Scalar::q_power(2) + Scalar::q_power(-2);
        add_pair(out, "serreC[0;1]", [&](bool ff) {
            auto g = ff ? f : e;
            return serre_word(g(0), g(1), qq);
        });
        if (eps.at(1) == eps.at(2)) {
            Scalar br3 = Scalar(quantum_int(3));
            add_pair(out, "cubicC[1;0]", [&](bool ff) {
                auto g = ff ? f : e;
                WordPtr a = g(1), b = g(0);
                return W::sum({{Scalar(1), W::prod({a, a, a, b})},
                               {-br3, W::prod({a, a, b, a})},
                               {br3, W::prod({a, b, a, a})},
                               {Scalar(-1), W::prod({b, a, a, a})}});
            });
        }
        Scalar q1 = q_sub(eps.at(1)), q2 = q_sub(eps.at(2)), q3 = q_sub(eps.at(3));
        if (eps.at(1) != eps.at(2) && eps.at(2) != eps.at(3)) {
            add_pair(out, "bracketC6", [&](bool ff) {
                auto g = ff ? f : e;
                WordPtr inner = W::bracket(g(2), g(1), q2);
                WordPtr w = W::bracket(inner, g(0), q1 * q1);
                w = W::bracket(w, inner, Scalar(1));
                return W::bracket(w, g(1), Scalar(1));
            });
        }
        if (eps.at(1) != eps.at(2) && eps.at(2) == eps.at(3)) {
            add_pair(out, "bracketC8", [&](bool ff) {
                auto g = ff ? f : e;
                WordPtr w = W::bracket(g(3), g(2), q3);
                w = W::bracket(w, g(1), q2);
                w = W::bracket(w, g(0), q1 * q1);
                w = W::bracket(w, g(1), q1);
                w = W::bracket(w, g(2), q2);
                return W::bracket(w, g(1), Scalar(1));
            });
        }
    }
    return out;
}

} // namespace

std::vector<Relation> relation_catalog(char X, const Epsilon& eps) {
    return catalog_impl(X, eps, false);
}

std::vector<Relation> mutated_catalog(char X, const Epsilon& eps) {
    return catalog_impl(X, eps, true);
}

int node_parity(char X, const Epsilon& eps, int i) {
    if (i == 0) {
        if (X == 'C') return 0;
        return eps.at(1) != eps.at(2) ? 1 : 0;
    }
    return eps.at(i) != eps.at(i + 1) ? 1 : 0;
}

WordPtr sigma_word(int j) { return WordExpr::gen(GenSym::sigma(j)); }

namespace {

// sigma_{<=j} = sigma_1 ... sigma_j
WordPtr sigma_leq(int j) {
    std::vector<WordPtr> fs;
    for (int t = 1; t <= j; ++t) fs.push_back(sigma_word(t));
    return WordExpr::prod(std::move(fs));
}

// varsigma_i^exp with varsigma_i = sigma_i sigma_{i+1}; exponent mod 2
WordPtr varsigma_pow(int i, int exp) {
    if (((exp % 2) + 2) % 2 == 0) return nullptr;
    return WordExpr::prod(sigma_word(i), sigma_word(i + 1));
}

WordPtr attach(WordPtr base, WordPtr dressing) {
    if (!dressing) return base;
    return WordExpr::prod(std::move(base), std::move(dressing));
}

} // namespace

TauOps tau_operators(const ModuleConfig& cfg) {
    const Epsilon& eps = cfg.eps;
    const int n = cfg.n();
    // maximal constant-parity runs of I = {1..n}; i_k = max of run k
    std::vector<int> run_start(static_cast<std::size_t>(n) + 1, 1);
    std::vector<int> run_end(static_cast<std::size_t>(n) + 1, n);
    {
        int start = 1;
        for (int j = 1; j <= n; ++j) {
            if (j == n || eps.at(j) != eps.at(j + 1)) {
                for (int t = start; t <= j; ++t) {
                    run_start[static_cast<std::size_t>(t)] = start;
                    run_end[static_cast<std::size_t>(t)] = j;
                }
                start = j + 1;
            }
        }
    }

    TauOps ops;
    ops.E.resize(static_cast<std::size_t>(n));
    ops.F.resize(static_cast<std::size_t>(n));
    ops.K.resize(static_cast<std::size_t>(n));
    ops.Kinv.resize(static_cast<std::size_t>(n));
    ops.parity.resize(static_cast<std::size_t>(n));

    // dressing for node i computed from the pattern at slots (i, i+1);
    // node 0 reuses the slot-1 pattern (X = D) or is handled separately (X = C)
    auto build = [&](int node, int i, WordPtr ge, WordPtr gf, WordPtr gk, WordPtr gkinv) {
        int a = eps.at(i), b = eps.at(i + 1);
        WordPtr E, F, K, Kinv;
        if (a == 0 && b == 0) {
            E = ge;
            F = gf;
            K = gk;
            Kinv = gkinv;
        } else if (a == 0 && b == 1) {
            E = attach(ge, sigma_leq(i));
            F = attach(gf, attach(sigma_leq(i), varsigma_pow(i, 1)));
            K = attach(gk, varsigma_pow(i, 1));
            Kinv = attach(gkinv, varsigma_pow(i, 1));
        } else if (a == 1 && b == 1) {
            int expo = i - (run_start[static_cast<std::size_t>(i)] - 1);
            E = attach(ge, varsigma_pow(i, expo));
            F = WordExpr::scale(Scalar(-1), attach(gf, varsigma_pow(i, expo - 1)));
            K = attach(gk, varsigma_pow(i, 1));
            Kinv = attach(gkinv, varsigma_pow(i, 1));
        } else {
            int len = run_end[static_cast<std::size_t>(i)] -
                      (run_start[static_cast<std::size_t>(i)] - 1);
            E = attach(ge, attach(sigma_leq(i), varsigma_pow(i, len)));
            F = WordExpr::scale(Scalar(len % 2 == 0 ? 1 : -1),
                                attach(gf, attach(sigma_leq(i), varsigma_pow(i, len - 1))));
            K = attach(gk, varsigma_pow(i, 1));
            Kinv = attach(gkinv, varsigma_pow(i, 1));
        }
        ops.E[static_cast<std::size_t>(node)] = E;
        ops.F[static_cast<std::size_t>(node)] = F;
        ops.K[static_cast<std::size_t>(node)] = K;
        ops.Kinv[static_cast<std::size_t>(node)] = Kinv;
    };

    for (int i = 1; i < n; ++i) {
        ops.parity[static_cast<std::size_t>(i)] = node_parity(cfg.X, eps, i);
        build(i, i, e(i), f(i), k(i), k(i, -1));
    }
    ops.parity[0] = node_parity(cfg.X, eps, 0);
    if (cfg.X == 'D') {
        build(0, 1, e(0), f(0), k(0), k(0, -1));
    } else {
        ops.E[0] = eps.at(1) == 0 ? e(0) : WordExpr::scale(Scalar(-1), e(0));
        ops.F[0] = f(0);
        ops.K[0] = k(0);
        ops.Kinv[0] = k(0, -1);
    }
    return ops;
}

std::vector<Relation> yamane_catalog(const ModuleConfig& cfg) {
    const char X = cfg.X;
    const Epsilon& eps = cfg.eps;
    const int n = cfg.n();
    TauOps t = tau_operators(cfg);
    auto E = [&](int i) { return t.E[static_cast<std::size_t>(i)]; };
    auto F = [&](int i) { return t.F[static_cast<std::size_t>(i)]; };
    auto p = [&](int i) { return t.parity[static_cast<std::size_t>(i)]; };
    auto ev = [&](int i) { return alpha_vector(n, i, X); };
    auto sgn = [](int par) { return Scalar(par % 2 == 0 ? 1 : -1); };

    std::vector<Relation> out;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar super = sgn(p(i) * p(j));
            WordPtr lhs = W::sum({{Scalar(1), W::prod(E(i), F(j))},
                                  {-super, W::prod(F(j), E(i))}});
            if (i == j) {
                LaurentPoly div = (X == 'C' && i == 0)
                                      ? LaurentPoly::q_power(2) - LaurentPoly::q_power(-2)
                                      : LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
                int epsi = (i == 0) ? eps.at(1) : eps.at(i);
                Scalar c = Scalar(epsi == 0 ? 1 : -1) * Scalar(LaurentPoly(1), div);
                lhs = W::sum({{Scalar(1), lhs},
                              {-c, t.K[static_cast<std::size_t>(i)]},
                              {c, t.Kinv[static_cast<std::size_t>(i)]}});
            }
            out.push_back({"ycartan[E" + std::to_string(i) + ",F" + std::to_string(j) + "]", lhs});
        }

    for (int i = 0; i < n; ++i)
        if (p(i) == 1) {
            out.push_back({"ysquare[E" + std::to_string(i) + "]", W::prod(E(i), E(i))});
            out.push_back({"ysquare[F" + std::to_string(i) + "]", W::prod(F(i), F(i))});
        }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (form_pair(eps, ev(i), ev(j)) == 0) {
                Scalar super = sgn(p(i) * p(j));
                std::string nm = std::to_string(i) + "," + std::to_string(j);
                out.push_back({"ycommute_E[" + nm + "]",
                               W::sum({{Scalar(1), W::prod(E(i), E(j))},
                                       {-super, W::prod(E(j), E(i))}})});
                out.push_back({"ycommute_F[" + nm + "]",
                               W::sum({{Scalar(1), W::prod(F(i), F(j))},
                                       {-super, W::prod(F(j), F(i))}})});
            }

    for (int i = 1; i < n; ++i) {
        if (eps.at(i) != eps.at(i + 1)) continue;
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j >= n) continue;
            std::string nm = std::to_string(i) + ";" + std::to_string(j) + "]";
            out.push_back({"yserre_E[" + nm, serre_word(E(i), E(j), bracket2())});
            out.push_back({"yserre_F[" + nm, serre_word(F(i), F(j), bracket2())});
        }
    }

    // odd-node quartic as nested super-brackets
    auto ybracket_quartic = [&](auto g, int i) {
        Scalar t1 = sgn(p(i - 1)) * Scalar::q_power(1);
        Scalar t2 = sgn((p(i - 1) + p(i)) * p(i + 1)) * Scalar::q_power(-1);
        Scalar t3 = sgn(p(i - 1) + p(i) + p(i + 1));
        WordPtr w = W::bracket(g(i - 1), g(i), t1);
        w = W::bracket(w, g(i + 1), t2);
        return W::bracket(g(i), w, t3);
    };
    for (int i = 2; i <= n - 2; ++i) {
        if (eps.at(i) == eps.at(i + 1)) continue;
        out.push_back({"yquartic_E[" + std::to_string(i) + "]", ybracket_quartic(E, i)});
        out.push_back({"yquartic_F[" + std::to_string(i) + "]", ybracket_quartic(F, i)});
    }

    if (X == 'D') {
        if (eps.at(2) == eps.at(3)) {
            out.push_back({"yserre_E[2;0]", serre_word(E(2), E(0), bracket2())});
            out.push_back({"yserre_F[2;0]", serre_word(F(2), F(0), bracket2())});
        }
        if (eps.at(1) == eps.at(2)) {
            out.push_back({"yserre_E[0;2]", serre_word(E(0), E(2), bracket2())});
            out.push_back({"yserre_F[0;2]", serre_word(F(0), F(2), bracket2())});
        }
        if (eps.at(2) != eps.at(3)) {
            auto yb = [&](auto g) {
                Scalar t1 = sgn(p(3)) * Scalar::q_power(1);
                Scalar t2 = sgn((p(3) + p(2)) * p(0)) * Scalar::q_power(-1);
                Scalar t3 = sgn(p(3) + p(2) + p(0));
                WordPtr w = W::bracket(g(3), g(2), t1);
                w = W::bracket(w, g(0), t2);
                return W::bracket(g(2), w, t3);
            };
            out.push_back({"yquartic023_E", yb(E)});
            out.push_back({"yquartic023_F", yb(F)});
        }
        if (eps.at(1) != eps.at(2)) {
            Scalar c = sgn(eps.at(2) + eps.at(3));
            auto yb = [&](auto g) {
                return W::sum({{Scalar(1), W::prod({g(0), g(1), g(2)})},
                               {Scalar(-1), W::prod({g(1), g(0), g(2)})},
                               {c, W::prod({g(1), g(2), g(0)})},
                               {-c, W::prod({g(0), g(2), g(1)})},
                               {Scalar(1), W::prod({g(2), g(0), g(1)})},
                               {Scalar(-1), W::prod({g(2), g(1), g(0)})}});
            };
            out.push_back({"ycubic012_E", yb(E)});
            out.push_back({"ycubic012_F", yb(F)});
        }
    } else {
        auto qpow = [&](int slot, int e_) {
            return Scalar::q_power(eps.at(slot) == 0 ? e_ : -e_);
        };
        {
            Scalar qq = Scalar::q_power(2) + Scalar::q_power(-2);
            out.push_back({"yserreC_E[0;1]", serre_word(E(0), E(1), qq)});
            out.push_back({"yserreC_F[0;1]", serre_word(F(0), F(1), qq)});
        }
        if (eps.at(1) == eps.at(2)) {
            Scalar br3 = Scalar(quantum_int(3));
            auto yb = [&](auto g) {
                WordPtr a = g(1), b = g(0);
                return W::sum({{Scalar(1), W::prod({a, a, a, b})},
                               {-br3, W::prod({a, a, b, a})},
                               {br3, W::prod({a, b, a, a})},
                               {Scalar(-1), W::prod({b, a, a, a})}});
            };
            out.push_back({"ycubicC_E[1;0]", yb(E)});
            out.push_back({"ycubicC_F[1;0]", yb(F)});
        }
        if (eps.at(1) != eps.at(2) && eps.at(2) != eps.at(3)) {
            auto yb = [&](auto g) {
                Scalar t1 = Scalar(-1) * qpow(2, 1);
                WordPtr inner = W::bracket(g(2), g(1), t1);
                WordPtr w = W::bracket(inner, g(0), qpow(1, 2));
                w = W::bracket(w, inner, Scalar(1));
                return W::bracket(w, g(1), Scalar(1));
            };
            out.push_back({"ybracketC6_E", yb(E)});
            out.push_back({"ybracketC6_F", yb(F)});
        }
        if (eps.at(1) != eps.at(2) && eps.at(2) == eps.at(3)) {
            auto yb = [&](auto g) {
                WordPtr w = W::bracket(g(3), g(2), qpow(3, 1));
                w = W::bracket(w, g(1), sgn(p(3)) * qpow(2, 1));
                w = W::bracket(w, g(0), qpow(1, 2));
                w = W::bracket(w, g(1), sgn(p(3) + 1) * qpow(1, 1));
                w = W::bracket(w, g(2), qpow(2, 1));
                return W::bracket(w, g(1), sgn(p(3)));
            };
            out.push_back({"ybracketC8_E", yb(E)});
            out.push_back({"ybracketC8_F", yb(F)});
        }
    }
    return out;
}

std::vector<Relation> sl_relation_catalog(int r) {
    std::vector<Relation> out;
    auto se = [](int j) { return W::gen(GenSym::sl_e(j)); };
    auto sf = [](int j) { return W::gen(GenSym::sl_f(j)); };
    for (int i = 1; i < r; ++i)
        for (int j = 1; j < r; ++j) {
            WordPtr lhs = W::sub(W::prod(se(i), sf(j)), W::prod(sf(j), se(i)));
            if (i == j) {
                Scalar c = Scalar(LaurentPoly(1), LaurentPoly::q_power(1) - LaurentPoly::q_power(-1));
                lhs = W::sum({{Scalar(1), lhs},
                              {-c, W::gen(GenSym::sl_k_alpha(i, r))},
                              {c, W::gen(GenSym::sl_k_alpha(i, r, -1))}});
            }
            out.push_back({"sl_cartan[" + std::to_string(i) + "," + std::to_string(j) + "]", lhs});
        }
    for (int i = 1; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            if (j == i + 1) {
                out.push_back({"sl_serre_e[" + std::to_string(i) + ";" + std::to_string(j) + "]",
                               serre_word(se(i), se(j), bracket2())});
                out.push_back({"sl_serre_e[" + std::to_string(j) + ";" + std::to_string(i) + "]",
                               serre_word(se(j), se(i), bracket2())});
                out.push_back({"sl_serre_f[" + std::to_string(i) + ";" + std::to_string(j) + "]",
                               serre_word(sf(i), sf(j), bracket2())});
                out.push_back({"sl_serre_f[" + std::to_string(j) + ";" + std::to_string(i) + "]",
                               serre_word(sf(j), sf(i), bracket2())});
            } else {
                out.push_back({"sl_commute_e[" + std::to_string(i) + "," + std::to_string(j) + "]",
                               W::sub(W::prod(se(i), se(j)), W::prod(se(j), se(i)))});
                out.push_back({"sl_commute_f[" + std::to_string(i) + "," + std::to_string(j) + "]",
                               W::sub(W::prod(sf(i), sf(j)), W::prod(sf(j), sf(i)))});
            }
        }
    return out;
}

Report verify_relations(const ModuleConfig& cfg, int D, const std::vector<Relation>& catalog,
                        int jobs) {
    if (D < 0) throw ConfigError("verify_relations: D must be nonnegative");
    Engine eng(cfg);
    Report rep;
    rep.suite = "relations";
    rep.config = {{"type", std::string(1, cfg.X)},
                  {"epsilon", cfg.eps.str()},
                  {"module", cfg.kind_str()},
                  {"ell", std::to_string(cfg.ell)},
                  {"maxDegree", std::to_string(D)},
                  {"psiTwist", cfg.psiTwist ? "true" : "false"}};

    // check truncation safety up front so the whole run fails loudly
    for (const auto& rel : catalog) {
        WordShape sh = WordShape::of(rel.expr, eng);
        if (sh.max_rise > D)
            throw TruncationUnsafe("relation " + rel.name + " needs degree headroom " +
                                   std::to_string(sh.max_rise) + " > D=" + std::to_string(D));
    }

    std::vector<ReportItem> items(catalog.size());
    parallel_for(catalog.size(), jobs, [&](std::size_t idx) {
        const Relation& rel = catalog[idx];
        Engine local(cfg);
        WordEvaluator ev(local);
        WordShape sh = WordShape::of(rel.expr, local);
        ReportItem item = pass_item(rel.name);
        long tested = 0;
        for (int d = 0; d + sh.max_rise <= D && item.status == Status::Pass; ++d) {
            SlicePtr slice = SliceCache::global().get(cfg.eps, cfg.factors(), d);
            // group by weight so the evaluator memo stays small
            std::map<Weight, std::vector<const TensorState*>> groups;
            for (const auto& s : slice->states) groups[state_weight(s)].push_back(&s);
            for (const auto& [w, states] : groups) {
                ev.clear();
                for (const TensorState* s : states) {
                    const SparseVec& res = ev.eval(rel.expr, *s);
                    ++tested;
                    if (!res.is_zero()) {
                        const auto& [ts, c] = *res.entries().begin();
                        item = fail_item(rel.name,
                                         Witness{s->str(), rel.name, to_string(c), ts.str()});
                        break;
                    }
                }
                if (item.status != Status::Pass) break;
            }
            ev.clear();
        }
        item.values.push_back({"statesTested", std::to_string(tested)});
        items[idx] = std::move(item);
    });
    for (auto& it : items) rep.add(std::move(it));
    return rep;
}

Report verify_relations(const ModuleConfig& cfg, int D, int jobs) {
    return verify_relations(cfg, D, relation_catalog(cfg.X, cfg.eps), jobs);
}

} // namespace qhowe
