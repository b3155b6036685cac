#include "qikm/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qikm/rng.hpp"

namespace qikm {

AssignmentMetric resolve_metric(const ScaledDataset& data, const KMeansConfig& cfg) {
    AssignmentMetric metric;
    metric.mode = cfg.mode;
    metric.form = cfg.distance_form;
    metric.weighted_dissim = cfg.weighted_dissim;
    if (cfg.mode == DistanceMode::QuantumHybrid)
        metric.hybrid_pair = select_hybrid_pair(feature_stats(data), cfg.encoding);
    return metric;
}

std::vector<int> assign_clusters(const ScaledDataset& data, const Matrix& centroids, const AssignmentMetric& metric) {
    if (centroids.rows() < 1) throw std::invalid_argument("no centroids");
    if (centroids.cols() != data.m()) throw std::invalid_argument("centroid dimension mismatch");

    std::vector<int> assignments(data.n());
    for (int j = 0; j < data.n(); ++j) {
        const auto point = data.rows.row(j);
        int best = 0;
        double best_dist = assignment_distance(point, centroids.row(0), metric);
        for (int i = 1; i < centroids.rows(); ++i) {
            const double d = assignment_distance(point, centroids.row(i), metric);
            if (d < best_dist) {
                best_dist = d;
                best = i;
            }
        }
        assignments[j] = best;
    }
    return assignments;
}

Matrix update_centroids(const ScaledDataset& data, std::span<const int> assignments, int k, const Matrix& previous) {
    if (static_cast<int>(assignments.size()) != data.n()) throw std::invalid_argument("assignment length mismatch");
    if (previous.rows() != k || previous.cols() != data.m()) throw std::invalid_argument("previous centroid shape mismatch");

    Matrix centroids(k, data.m());
    std::vector<int64_t> counts(k, 0);
    for (int j = 0; j < data.n(); ++j) {
        const int c = assignments[j];
        if (c < 0 || c >= k) throw std::invalid_argument("assignment out of range");
        ++counts[c];
        for (int d = 0; d < data.m(); ++d) centroids.at(c, d) += data.rows.at(j, d);
    }
    for (int i = 0; i < k; ++i) {
        if (counts[i] > 0) {
            for (int d = 0; d < data.m(); ++d) centroids.at(i, d) /= static_cast<double>(counts[i]);
        } else {
            for (int d = 0; d < data.m(); ++d) centroids.at(i, d) = previous.at(i, d);
        }
    }
    return centroids;
}

Matrix quantum_inspired_init(const ScaledDataset& data, const KMeansConfig& cfg, std::mt19937_64& rng) {
    const int n = data.n();
    if (cfg.k > n) throw std::invalid_argument("k exceeds sample count");
    const AssignmentMetric metric = resolve_metric(data, cfg);

    std::vector<size_t> chosen;
    chosen.reserve(cfg.k);
    chosen.push_back(uniform_index(rng, n));

    // Squared distance to the nearest chosen centroid, 0 for chosen rows.
    std::vector<double> weight(n);
    std::vector<char> taken(n, 0);
    taken[chosen[0]] = 1;
    for (int j = 0; j < n; ++j) {
        const double d = assignment_distance(data.rows.row(j), data.rows.row(chosen[0]), metric);
        weight[j] = taken[j] ? 0.0 : d * d;
    }

    while (static_cast<int>(chosen.size()) < cfg.k) {
        double total = 0.0;
        for (double w : weight) total += w;

        size_t next;
        if (total > 0.0) {
            next = weighted_index(rng, weight);
        } else {
            // Every remaining row sits at distance 0 from a chosen centroid
            // (duplicates, or a degenerate quantum metric). Keep rows distinct
            // by index and draw uniformly from the rest.
            size_t remaining = 0;
            for (int j = 0; j < n; ++j) remaining += !taken[j];
            size_t pick = uniform_index(rng, remaining);
            next = 0;
            for (int j = 0; j < n; ++j) {
                if (taken[j]) continue;
                if (pick == 0) {
                    next = j;
                    break;
                }
                --pick;
            }
        }

        chosen.push_back(next);
        taken[next] = 1;
        weight[next] = 0.0;
        for (int j = 0; j < n; ++j) {
            if (taken[j]) continue;
            const double d = assignment_distance(data.rows.row(j), data.rows.row(next), metric);
            weight[j] = std::min(weight[j], d * d);
        }
    }

    Matrix centroids(cfg.k, data.m());
    for (int i = 0; i < cfg.k; ++i)
        for (int d = 0; d < data.m(); ++d) centroids.at(i, d) = data.rows.at(chosen[i], d);
    return centroids;
}

namespace {

Matrix random_init(const ScaledDataset& data, const KMeansConfig& cfg, std::mt19937_64& rng) {
    if (cfg.k > data.n()) throw std::invalid_argument("k exceeds sample count");

    // Partial Fisher-Yates over row indices: k distinct rows.
    std::vector<int> indices(data.n());
    for (int i = 0; i < data.n(); ++i) indices[i] = i;
    for (int i = 0; i < cfg.k; ++i) {
        const size_t j = i + uniform_index(rng, indices.size() - i);
        std::swap(indices[i], indices[j]);
    }

    Matrix centroids(cfg.k, data.m());
    for (int i = 0; i < cfg.k; ++i)
        for (int d = 0; d < data.m(); ++d) centroids.at(i, d) = data.rows.at(indices[i], d);
    return centroids;
}

double max_displacement(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (int i = 0; i < a.rows(); ++i) worst = std::max(worst, euclidean_distance(a.row(i), b.row(i)));
    return worst;
}

}  // namespace

ClusteringResult kmeans_run(const ScaledDataset& data, const KMeansConfig& cfg) {
    if (cfg.k > data.n()) throw std::invalid_argument("k exceeds sample count");
    std::mt19937_64 rng(splitmix64(cfg.seed));
    Matrix centroids = cfg.init == InitMethod::QuantumInspired ? quantum_inspired_init(data, cfg, rng)
                                                               : random_init(data, cfg, rng);
    return kmeans_run_from(data, cfg, std::move(centroids));
}

ClusteringResult kmeans_run_from(const ScaledDataset& data, const KMeansConfig& cfg, Matrix initial_centroids) {
    if (cfg.k < 1) throw std::invalid_argument("k must be positive");
    if (cfg.max_iter < 1) throw std::invalid_argument("max_iter must be positive");
    if (cfg.patience < 1) throw std::invalid_argument("patience must be positive");
    if (cfg.tol <= 0.0) throw std::invalid_argument("tol must be positive");
    if (initial_centroids.rows() != cfg.k || initial_centroids.cols() != data.m())
        throw std::invalid_argument("initial centroid shape mismatch");

    const AssignmentMetric metric = resolve_metric(data, cfg);
    Matrix centroids = std::move(initial_centroids);

    ClusteringResult result;
    int streak = 0;
    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        result.assignments = assign_clusters(data, centroids, metric);
        Matrix updated = update_centroids(data, result.assignments, cfg.k, centroids);
        result.sse_trace.push_back(sse(data, result.assignments, updated));
        result.n_iterations = iter;

        const double moved = max_displacement(updated, centroids);
        centroids = std::move(updated);

        streak = moved < cfg.tol ? streak + 1 : 0;
        if (streak >= cfg.patience) {
            result.converged = true;
            break;
        }
    }
    result.centroids = std::move(centroids);
    return result;
}

double sse(const ScaledDataset& data, std::span<const int> assignments, const Matrix& centroids) {
    if (static_cast<int>(assignments.size()) != data.n()) throw std::invalid_argument("assignment length mismatch");
    double total = 0.0;
    for (int j = 0; j < data.n(); ++j) {
        const double d = euclidean_distance(data.rows.row(j), centroids.row(assignments[j]));
        total += d * d;
    }
    return total;
}

}  // namespace qikm
