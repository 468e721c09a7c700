#include "qhowe/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace qhowe {

namespace {

// r -= c * p, both sorted sparse rows
SparseRow row_axpy(const SparseRow& r, const Scalar& c, const SparseRow& p) {
    SparseRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() && j < p.size()) {
        if (r[i].first < p[j].first) {
            out.push_back(r[i++]);
        } else if (r[i].first > p[j].first) {
            out.push_back({p[j].first, -(c * p[j].second)});
            ++j;
        } else {
            Scalar v = r[i].second - c * p[j].second;
            if (!v.is_zero()) out.push_back({r[i].first, v});
            ++i;
            ++j;
        }
    }
    for (; i < r.size(); ++i) out.push_back(r[i]);
    for (; j < p.size(); ++j) out.push_back({p[j].first, -(c * p[j].second)});
    return out;
}

} // namespace

KernelBasis kernel(std::vector<SparseRow> rows, int cols) {
    // echelon pass: pivots recorded as (pivot col -> normalized row)
    std::vector<SparseRow> pivots;      // normalized, leading coefficient 1
    std::vector<int> pivot_col_of_row;  // parallel to pivots
    std::vector<int> col_to_pivot(static_cast<std::size_t>(cols), -1);

    // rows are processed in order; each is reduced against existing pivots,
    // then becomes a pivot itself unless it vanishes
    std::vector<SparseRow> pending = std::move(rows);
    // stable behaviour: keep input order; "simplest pivot" applies when several
    // pending rows share the same leading column, so process by leading column
    while (true) {
        // reduce all pending rows against known pivots
        for (auto& r : pending) {
            bool changed = true;
            while (changed && !r.empty()) {
                changed = false;
                int lead = r.front().first;
                int p = col_to_pivot[static_cast<std::size_t>(lead)];
                if (p >= 0) {
                    r = row_axpy(r, r.front().second, pivots[static_cast<std::size_t>(p)]);
                    changed = true;
                }
            }
        }
        pending.erase(std::remove_if(pending.begin(), pending.end(),
                                     [](const SparseRow& r) { return r.empty(); }),
                      pending.end());
        if (pending.empty()) break;
        // lowest leading column among pending rows
        int best_col = cols;
        for (const auto& r : pending) best_col = std::min(best_col, r.front().first);
        // simplest pivot among rows leading at best_col
        std::size_t best = pending.size();
        std::size_t best_terms = 0;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (pending[i].front().first != best_col) continue;
            std::size_t terms = pending[i].front().second.term_count();
            if (best == pending.size() || terms < best_terms) {
                best = i;
                best_terms = terms;
            }
        }
        SparseRow piv = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));
        Scalar lead_inv = piv.front().second.inverse();
        for (auto& [c, v] : piv) v *= lead_inv;
        col_to_pivot[static_cast<std::size_t>(best_col)] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(piv));
        pivot_col_of_row.push_back(best_col);
    }

    // back-substitute to reduced echelon form
    std::vector<std::size_t> order(pivots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pivot_col_of_row[a] > pivot_col_of_row[b];
    });
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        std::size_t i = order[oi];
        SparseRow& r = pivots[i];
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t t = 1; t < r.size(); ++t) {
                int p = col_to_pivot[static_cast<std::size_t>(r[t].first)];
                if (p >= 0) {
                    r = row_axpy(r, r[t].second, pivots[static_cast<std::size_t>(p)]);
                    changed = true;
                    break;
                }
            }
        }
    }

    KernelBasis out;
    out.cols = cols;
    out.rank = static_cast<int>(pivots.size());
    for (int c = 0; c < cols; ++c)
        if (col_to_pivot[static_cast<std::size_t>(c)] < 0) out.free_cols.push_back(c);
    for (int fc : out.free_cols) {
        std::vector<Scalar> v(static_cast<std::size_t>(cols));
        v[static_cast<std::size_t>(fc)] = Scalar(1);
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            // pivot row: x_{pivot col} + sum_{free} a_f x_f = 0
            const SparseRow& r = pivots[p];
            for (std::size_t t = 1; t < r.size(); ++t)
                if (r[t].first == fc) v[static_cast<std::size_t>(pivot_col_of_row[p])] = -r[t].second;
        }
        out.vecs.push_back(std::move(v));
    }
    return out;
}

int dense_rank(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty()) return 0;
    std::vector<SparseRow> sparse;
    sparse.reserve(rows.size());
    for (const auto& r : rows) {
        SparseRow s;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (!r[c].is_zero()) s.push_back({static_cast<int>(c), r[c]});
        sparse.push_back(std::move(s));
    }
    return kernel(std::move(sparse), static_cast<int>(rows[0].size())).rank;
}

int solution_space_dim(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return 0;
    int cols = static_cast<int>(rows[0].size());
    return cols - dense_rank(rows);
}

} // namespace qhowe
