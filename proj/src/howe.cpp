#include "qhowe/howe.hpp"

#include <algorithm>

#include "qhowe/parallel.hpp"

namespace qhowe {

namespace {

// Stacked matrix of all e_i restricted to the given states; rows are indexed
// by (node, image state) pairs in deterministic order.
std::vector<SparseRow> stacked_raising_rows(const Engine& eng,
                                            const std::vector<TensorState>& states) {
    const int n = eng.cfg().n();
    std::vector<SparseRow> rows;
    for (int i = 0; i < n; ++i) {
        std::map<TensorState, SparseRow> by_target;
        for (std::size_t c = 0; c < states.size(); ++c) {
            SparseVec img = eng.apply(GenSym::e(i), states[c]);
            for (const auto& [t, coeff] : img.entries())
                by_target[t].push_back({static_cast<int>(c), coeff});
        }
        for (auto& [t, row] : by_target) rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SparseVec> kernel_vectors(const KernelBasis& kb,
                                      const std::vector<TensorState>& states) {
    std::vector<SparseVec> out;
    for (const auto& v : kb.vecs) {
        SparseVec vec;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero()) vec.add(states[c], v[c]);
        out.push_back(std::move(vec));
    }
    return out;
}

} // namespace

std::vector<SparseVec> hwv_space(const ModuleConfig& cfg, const Weight& w, int d) {
    Engine eng(cfg);
    SlicePtr slice = SliceCache::global().get(cfg.eps, cfg.factors(), d, w);
    if (slice->dim() == 0) return {};
    std::vector<SparseRow> rows = stacked_raising_rows(eng, slice->states);
    KernelBasis kb = kernel(std::move(rows), slice->dim());
    return kernel_vectors(kb, slice->states);
}

std::vector<DecompRow> decompose(const ModuleConfig& cfg, int d_max, int jobs) {
    GroupSpec G = cfg.group();
    std::vector<Partition> lams;
    for (int d = 0; d <= d_max; ++d)
        for (const Partition& lam : enumerate_PG(G, cfg.eps, d)) lams.push_back(lam);

    std::vector<DecompRow> rows(lams.size());
    parallel_for(lams.size(), jobs, [&](std::size_t idx) {
        const Partition& lam = lams[idx];
        DecompRow row;
        row.lambda = lam;
        row.weight = lambda_weight(lam, cfg.eps, G);
        row.multiplicity = static_cast<int>(hwv_space(cfg, row.weight, lam.size()).size());
        row.classicalDim = dim_G(lam, G);
        row.match = (row.multiplicity == row.classicalDim);
        rows[idx] = std::move(row);
    });
    return rows;
}

ScanResult full_kernel_scan(const ModuleConfig& cfg, int d) {
    Engine eng(cfg);
    GroupSpec G = cfg.group();
    ScanResult res;
    res.degree = d;

    SlicePtr slice = SliceCache::global().get(cfg.eps, cfg.factors(), d);
    if (slice->dim() > 0) {
        std::vector<SparseRow> rows = stacked_raising_rows(eng, slice->states);
        KernelBasis kb = kernel(std::move(rows), slice->dim());
        res.total = static_cast<int>(kb.vecs.size());
        for (const SparseVec& v : kernel_vectors(kb, slice->states)) {
            // elimination keeps weight blocks separate; assert and record
            Weight w = state_weight(v.entries().begin()->first);
            for (const auto& [s, c] : v.entries())
                if (state_weight(s) != w)
                    throw std::logic_error("full_kernel_scan: kernel vector mixes weights");
            res.by_weight[w] += 1;
        }
    }

    std::vector<Partition> lams = enumerate_PG(G, cfg.eps, d);
    res.expected_total = 0;
    std::map<Weight, bool> predicted;
    for (const Partition& lam : lams) {
        res.expected_total += dim_G(lam, G);
        predicted[lambda_weight(lam, cfg.eps, G)] = true;
    }
    res.totals_match = (res.total == res.expected_total);
    res.weights_predicted = true;
    for (const auto& [w, cnt] : res.by_weight)
        if (!predicted.count(w)) res.weights_predicted = false;
    return res;
}

RestrictedModule b_stability(const ModuleConfig& cfg, const IqgParams& params,
                             const Partition& lam) {
    Engine eng(cfg);
    GroupSpec G = cfg.group();
    Weight w = lambda_weight(lam, cfg.eps, G);
    int d = lam.size();

    SlicePtr slice = SliceCache::global().get(cfg.eps, cfg.factors(), d, w);
    std::vector<SparseRow> rows = stacked_raising_rows(eng, slice->states);
    KernelBasis kb = kernel(std::move(rows), slice->dim());
    RestrictedModule mod;
    mod.lambda = lam;
    mod.basis = kernel_vectors(kb, slice->states);
    int dim = static_cast<int>(mod.basis.size());
    if (dim == 0) return mod;

    WordEvaluator ev(eng);
    for (const auto& [name, word] : iqg_generators(cfg, params)) {
        std::vector<std::vector<Scalar>> M(static_cast<std::size_t>(dim),
                                           std::vector<Scalar>(static_cast<std::size_t>(dim)));
        for (int kcol = 0; kcol < dim; ++kcol) {
            SparseVec img = ev.apply(word, mod.basis[static_cast<std::size_t>(kcol)]);
            // coordinates read off at the free columns of the kernel basis
            SparseVec remainder = img;
            for (int j = 0; j < dim; ++j) {
                const TensorState& marker =
                    slice->states[static_cast<std::size_t>(kb.free_cols[static_cast<std::size_t>(j)])];
                Scalar c = img.coeff(marker);
                M[static_cast<std::size_t>(j)][static_cast<std::size_t>(kcol)] = c;
                if (!c.is_zero())
                    remainder.axpy(-c, mod.basis[static_cast<std::size_t>(j)]);
            }
            if (!remainder.is_zero()) {
                const auto& [ts, c] = *remainder.entries().begin();
                throw StabilityViolation("generator " + name + " leaves the multiplicity space at " +
                                         ts.str() + " with residual " + to_string(c));
            }
        }
        mod.gens.push_back({name, std::move(M)});
    }
    return mod;
}

int endo_dim(const RestrictedModule& mod) {
    int d = static_cast<int>(mod.basis.size());
    if (d == 0) return 0;
    // solve X M = M X for all restricted generator matrices M
    std::vector<std::vector<Scalar>> rows;
    for (const auto& [name, M] : mod.gens) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                std::vector<Scalar> row(static_cast<std::size_t>(d) * d);
                for (int c = 0; c < d; ++c) {
                    // + X[a][c] M[c][b]
                    row[static_cast<std::size_t>(a) * d + c] +=
                        M[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)];
                    // - M[a][c] X[c][b]
                    row[static_cast<std::size_t>(c) * d + b] -=
                        M[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
                }
                rows.push_back(std::move(row));
            }
    }
    return solution_space_dim(rows);
}

int endo_dim(const ModuleConfig& cfg, const IqgParams& params, const Partition& lam) {
    return endo_dim(b_stability(cfg, params, lam));
}

} // namespace qhowe
