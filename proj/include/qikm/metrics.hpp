#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qikm/encoding.hpp"

namespace qikm {

/// Cross-tabulation of true classes against predicted clusters. Pair counts
/// for RI/ARI come from this table, in exact integer arithmetic.
struct ContingencyTable {
    std::vector<std::vector<int64_t>> counts;  // r x s
    std::vector<int64_t> row_sums;
    std::vector<int64_t> col_sums;
    int64_t n = 0;
};

/// Builds the table from two labelings of the same n >= 2 samples. Label
/// values may be arbitrary ints; rows/columns are ordered by sorted value.
ContingencyTable contingency(std::span<const int> true_labels, std::span<const int> pred_labels);

/// Rand index (a + b) / C(n, 2): agreeing pairs over all pairs.
double rand_index(const ContingencyTable& t);

/// Adjusted Rand index via the hypergeometric pair-count form; in [-1, 1].
/// When both partitions are trivial the index is 1 by convention.
double adjusted_rand_index(const ContingencyTable& t);

/// Mean silhouette coefficient (B - A) / max(A, B) over all samples, with
/// Euclidean distances on the scaled features. A is the mean intra-cluster
/// distance excluding self; B is the smallest mean distance to another
/// cluster. Samples in singleton clusters score 0. Requires at least two
/// non-empty clusters.
double silhouette_score(const ScaledDataset& data, std::span<const int> assignments);

}  // namespace qikm
