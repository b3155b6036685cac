#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "qikm/distance.hpp"
#include "qikm/metrics.hpp"
#include "test_util.hpp"

using namespace qikm;

namespace {

/// Definitional O(n^2) pair counts: (both-same, both-different) over all pairs.
std::pair<int64_t, int64_t> pair_count_oracle(const std::vector<int>& t, const std::vector<int>& p) {
    int64_t same_same = 0, diff_diff = 0;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) {
            const bool st = t[i] == t[j], sp = p[i] == p[j];
            if (st && sp) ++same_same;
            if (!st && !sp) ++diff_diff;
        }
    return {same_same, diff_diff};
}

/// Mean per-sample silhouette by the naive triple loop.
double silhouette_oracle(const ScaledDataset& data, const std::vector<int>& assign) {
    const int n = data.n();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        int own_count = 0;
        for (int j = 0; j < n; ++j)
            if (j != i && assign[j] == assign[i]) ++own_count;
        if (own_count == 0) continue;

        double a = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i && assign[j] == assign[i]) a += euclidean_distance(data.rows.row(i), data.rows.row(j));
        a /= own_count;

        double b = std::numeric_limits<double>::infinity();
        std::vector<int> clusters(assign.begin(), assign.end());
        std::sort(clusters.begin(), clusters.end());
        clusters.erase(std::unique(clusters.begin(), clusters.end()), clusters.end());
        for (int c : clusters) {
            if (c == assign[i]) continue;
            double sum = 0.0;
            int count = 0;
            for (int j = 0; j < n; ++j)
                if (assign[j] == c) {
                    sum += euclidean_distance(data.rows.row(i), data.rows.row(j));
                    ++count;
                }
            if (count > 0) b = std::min(b, sum / count);
        }
        total += (b - a) / std::max(a, b);
    }
    return total / n;
}

std::vector<int> random_labels(std::mt19937& gen, int n, int k) {
    std::uniform_int_distribution<int> dist(0, k - 1);
    std::vector<int> labels(n);
    for (int& l : labels) l = dist(gen);
    return labels;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("contingency table structure") {
    const auto t = contingency(std::vector<int>{0, 0, 1, 1}, std::vector<int>{0, 0, 1, 1});
    REQUIRE(t.counts.size() == 2);
    CHECK(t.counts[0][0] == 2);
    CHECK(t.counts[0][1] == 0);
    CHECK(t.counts[1][0] == 0);
    CHECK(t.counts[1][1] == 2);
    CHECK(t.n == 4);

    const auto col = contingency(std::vector<int>{0, 1}, std::vector<int>{0, 0});
    REQUIRE(col.counts.size() == 2);
    REQUIRE(col.counts[0].size() == 1);
    CHECK(col.counts[0][0] == 1);
    CHECK(col.counts[1][0] == 1);

    CHECK_THROWS_AS(contingency(std::vector<int>{0}, std::vector<int>{0}), std::invalid_argument);
    CHECK_THROWS_AS(contingency(std::vector<int>{0, 1}, std::vector<int>{0}), std::invalid_argument);
}

TEST_CASE("contingency row and column sums stay consistent") {
    std::mt19937 gen(61);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 30;
        const auto t = random_labels(gen, n, 4);
        const auto p = random_labels(gen, n, 3);
        const auto table = contingency(t, p);
        int64_t sum = 0;
        for (const auto& row : table.counts)
            sum = std::accumulate(row.begin(), row.end(), sum);
        CHECK(sum == table.n);
        CHECK(std::accumulate(table.row_sums.begin(), table.row_sums.end(), int64_t{0}) == table.n);
        CHECK(std::accumulate(table.col_sums.begin(), table.col_sums.end(), int64_t{0}) == table.n);
    }
}

TEST_CASE("rand index known values") {
    CHECK(rand_index(contingency(std::vector<int>{0, 0, 1, 1}, std::vector<int>{0, 0, 1, 1})) == 1.0);
    CHECK(rand_index(contingency(std::vector<int>{0, 1}, std::vector<int>{0, 0})) == 0.0);
    CHECK(rand_index(contingency(std::vector<int>{0, 0, 1, 1}, std::vector<int>{0, 1, 0, 1})) ==
          doctest::Approx(2.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("rand index matches the definitional pair count exactly") {
    std::mt19937 gen(67);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 49;
        const auto t = random_labels(gen, n, 1 + trial % 5);
        const auto p = random_labels(gen, n, 1 + (trial / 2) % 4);
        const auto [a, b] = pair_count_oracle(t, p);
        const int64_t pairs = int64_t{n} * (n - 1) / 2;
        CHECK(rand_index(contingency(t, p)) == static_cast<double>(a + b) / static_cast<double>(pairs));
    }
}

TEST_CASE("adjusted rand index known values") {
    CHECK(adjusted_rand_index(contingency(std::vector<int>{0, 0, 1, 1}, std::vector<int>{1, 1, 0, 0})) == 1.0);
    CHECK(adjusted_rand_index(contingency(std::vector<int>{0, 0, 1, 1}, std::vector<int>{0, 1, 0, 1})) == -0.5);
    // Trivial partitions on both sides.
    CHECK(adjusted_rand_index(contingency(std::vector<int>{0, 0, 0}, std::vector<int>{1, 1, 1})) == 1.0);
    CHECK(adjusted_rand_index(contingency(std::vector<int>{0, 1, 2}, std::vector<int>{2, 1, 0})) == 1.0);
}

TEST_CASE("ari is invariant under relabelings and 1 only for identical partitions") {
    std::mt19937 gen(71);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + trial % 5;
        auto t = random_labels(gen, n, 3);
        auto p = random_labels(gen, n, 3);
        const double reference = adjusted_rand_index(contingency(t, p));
        const double reference_ri = rand_index(contingency(t, p));

        std::vector<int> perm{0, 1, 2};
        do {
            std::vector<int> relabeled(p.size());
            for (size_t i = 0; i < p.size(); ++i) relabeled[i] = perm[p[i]];
            CHECK(adjusted_rand_index(contingency(t, relabeled)) == doctest::Approx(reference).epsilon(1e-12));
            CHECK(rand_index(contingency(t, relabeled)) == doctest::Approx(reference_ri).epsilon(1e-12));
            std::vector<int> self(t.size());
            for (size_t i = 0; i < t.size(); ++i) self[i] = perm[t[i]];
            CHECK(adjusted_rand_index(contingency(t, self)) == 1.0);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("ari agrees with a permutation-model expectation oracle") {
    // ARI = (RI - E[RI]) / (1 - E[RI]) where E[RI] is estimated by permuting
    // one labeling; the pair-count formula must land within Monte-Carlo noise.
    std::mt19937 gen(73);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 8;
        const auto t = random_labels(gen, n, 3);
        auto p = random_labels(gen, n, 3);
        const double ri = rand_index(contingency(t, p));
        const double ari = adjusted_rand_index(contingency(t, p));

        double sum = 0.0;
        const int samples = 20000;
        auto shuffled = p;
        for (int s = 0; s < samples; ++s) {
            std::shuffle(shuffled.begin(), shuffled.end(), gen);
            sum += rand_index(contingency(t, shuffled));
        }
        const double expected_ri = sum / samples;
        if (std::abs(1.0 - expected_ri) < 1e-6) continue;  // degenerate draw
        CHECK(std::abs(ari - (ri - expected_ri) / (1.0 - expected_ri)) < 0.02);
    }
}

TEST_CASE("rand and adjusted rand agree on perfection") {
    std::mt19937 gen(79);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + trial % 20;
        const auto t = random_labels(gen, n, 3);
        const auto p = random_labels(gen, n, 3);
        const auto table = contingency(t, p);
        if (rand_index(table) == 1.0)
            CHECK(adjusted_rand_index(table) == 1.0);
        else
            CHECK(adjusted_rand_index(table) < 1.0);
    }
}

TEST_CASE("silhouette of two tight, well-separated pairs") {
    const auto data = qikm::test::make_scaled({{0.0}, {0.01}, {0.99}, {1.0}});
    const std::vector<int> assign{0, 0, 1, 1};
    CHECK(silhouette_score(data, assign) > 0.95);
}

TEST_CASE("silhouette of deliberately swapped clusters is negative") {
    const auto data = qikm::test::make_scaled({{0.0}, {0.0}, {1.0}, {1.0}});
    const std::vector<int> swapped{0, 1, 0, 1};
    CHECK(silhouette_score(data, swapped) < 0.0);
}

TEST_CASE("silhouette handles singletons and rejects a single cluster") {
    const auto data = qikm::test::make_scaled({{0.0}, {0.5}, {1.0}});
    // Sample 0 is a singleton: contributes 0.
    const std::vector<int> with_singleton{0, 1, 1};
    CHECK_NOTHROW(silhouette_score(data, with_singleton));

    CHECK_THROWS_AS(silhouette_score(data, std::vector<int>{2, 2, 2}), std::invalid_argument);
}

TEST_CASE("silhouette matches the triple-loop oracle") {
    std::mt19937 gen(83);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 6 + trial % 20;
        const int m = 1 + trial % 3;
        std::vector<std::vector<double>> rows(n);
        for (auto& r : rows) r = qikm::test::random_scaled_vector(gen, m);
        auto assign = random_labels(gen, n, 2 + trial % 3);
        assign[0] = 0;
        assign[1] = 1;  // ensure two clusters exist
        const auto data = qikm::test::make_scaled(rows);
        CHECK(std::abs(silhouette_score(data, assign) - silhouette_oracle(data, assign)) < 1e-10);
    }
}

TEST_CASE("silhouette is invariant under a global label swap and bounded") {
    std::mt19937 gen(89);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 8 + trial;
        std::vector<std::vector<double>> rows(n);
        for (auto& r : rows) r = qikm::test::random_scaled_vector(gen, 2);
        auto assign = random_labels(gen, n, 2);
        assign[0] = 0;
        assign[1] = 1;
        const auto data = qikm::test::make_scaled(rows);

        const double score = silhouette_score(data, assign);
        CHECK(score >= -1.0);
        CHECK(score <= 1.0);

        std::vector<int> flipped(assign.size());
        for (size_t i = 0; i < assign.size(); ++i) flipped[i] = 1 - assign[i];
        CHECK(silhouette_score(data, flipped) == doctest::Approx(score).epsilon(1e-12));
    }
}

}  // TEST_SUITE
