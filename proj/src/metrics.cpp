#include "qikm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "qikm/distance.hpp"

namespace qikm {

namespace {

int64_t choose2(int64_t n) { return n * (n - 1) / 2; }

std::map<int, int> index_by_value(std::span<const int> labels) {
    std::map<int, int> idx;
    for (int v : labels) idx.emplace(v, 0);
    int next = 0;
    for (auto& [value, i] : idx) i = next++;
    return idx;
}

}  // namespace

ContingencyTable contingency(std::span<const int> true_labels, std::span<const int> pred_labels) {
    if (true_labels.size() != pred_labels.size()) throw std::invalid_argument("label length mismatch");
    if (true_labels.size() < 2) throw std::invalid_argument("need at least 2 samples");

    const auto row_of = index_by_value(true_labels);
    const auto col_of = index_by_value(pred_labels);

    ContingencyTable t;
    t.n = static_cast<int64_t>(true_labels.size());
    t.counts.assign(row_of.size(), std::vector<int64_t>(col_of.size(), 0));
    for (size_t i = 0; i < true_labels.size(); ++i)
        ++t.counts[row_of.at(true_labels[i])][col_of.at(pred_labels[i])];

    t.row_sums.resize(row_of.size());
    t.col_sums.assign(col_of.size(), 0);
    for (size_t r = 0; r < t.counts.size(); ++r) {
        int64_t sum = 0;
        for (size_t c = 0; c < t.counts[r].size(); ++c) {
            sum += t.counts[r][c];
            t.col_sums[c] += t.counts[r][c];
        }
        t.row_sums[r] = sum;
    }
    return t;
}

double rand_index(const ContingencyTable& t) {
    int64_t same_same = 0;  // pairs together in both partitions
    for (const auto& row : t.counts)
        for (int64_t c : row) same_same += choose2(c);

    int64_t same_true = 0, same_pred = 0;
    for (int64_t r : t.row_sums) same_true += choose2(r);
    for (int64_t s : t.col_sums) same_pred += choose2(s);

    const int64_t total = choose2(t.n);
    // Pairs split in both partitions, by inclusion-exclusion.
    const int64_t diff_diff = total - same_true - same_pred + same_same;
    return static_cast<double>(same_same + diff_diff) / static_cast<double>(total);
}

double adjusted_rand_index(const ContingencyTable& t) {
    int64_t s_cells = 0;
    for (const auto& row : t.counts)
        for (int64_t c : row) s_cells += choose2(c);

    int64_t s_rows = 0, s_cols = 0;
    for (int64_t r : t.row_sums) s_rows += choose2(r);
    for (int64_t s : t.col_sums) s_cols += choose2(s);

    const double total = static_cast<double>(choose2(t.n));
    const double expected = static_cast<double>(s_rows) * static_cast<double>(s_cols) / total;
    const double maximum = 0.5 * static_cast<double>(s_rows + s_cols);
    if (maximum == expected) return 1.0;  // both partitions trivial
    return (static_cast<double>(s_cells) - expected) / (maximum - expected);
}

double silhouette_score(const ScaledDataset& data, std::span<const int> assignments) {
    const int n = data.n();
    if (static_cast<int>(assignments.size()) != n) throw std::invalid_argument("assignment length mismatch");

    std::map<int, int64_t> sizes;
    for (int a : assignments) ++sizes[a];
    if (sizes.size() < 2) throw std::invalid_argument("silhouette needs at least 2 clusters");

    double total = 0.0;
    std::map<int, double> mean_dist;
    for (int i = 0; i < n; ++i) {
        const int own = assignments[i];
        if (sizes.at(own) == 1) continue;  // singleton scores 0

        for (auto& [cluster, d] : mean_dist) d = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            mean_dist[assignments[j]] += euclidean_distance(data.rows.row(i), data.rows.row(j));
        }

        double a = 0.0;
        double b = std::numeric_limits<double>::infinity();
        for (const auto& [cluster, sum] : mean_dist) {
            if (cluster == own)
                a = sum / static_cast<double>(sizes.at(own) - 1);
            else if (sizes.at(cluster) > 0)
                b = std::min(b, sum / static_cast<double>(sizes.at(cluster)));
        }
        total += (b - a) / std::max(a, b);
    }
    return total / n;
}

}  // namespace qikm
