#pragma once

#include <vector>

#include "qhowe/scalar.hpp"

namespace qhowe {

// Sparse row: sorted (column, value) pairs, no zero values.
using SparseRow = std::vector<std::pair<int, Scalar>>;

struct KernelBasis {
    int cols = 0;
    int rank = 0;
    std::vector<int> free_cols;            // ascending
    std::vector<std::vector<Scalar>> vecs; // dense length-cols vectors; vec k has 1 at free_cols[k]
};

// Exact nullspace over Q(i)(v). Deterministic: pivot column = lowest remaining
// column index; among candidate rows the pivot with the fewest stored terms
// wins (ties resolved by row order).
KernelBasis kernel(std::vector<SparseRow> rows, int cols);

// Dimension of the solution space of a homogeneous dense system.
int solution_space_dim(const std::vector<std::vector<Scalar>>& rows);

// Rank of a dense matrix.
int dense_rank(std::vector<std::vector<Scalar>> rows);

} // namespace qhowe
