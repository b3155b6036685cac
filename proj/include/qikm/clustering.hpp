#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qikm/distance.hpp"
#include "qikm/encoding.hpp"
#include "qikm/matrix.hpp"

namespace qikm {

enum class InitMethod { Random, QuantumInspired };

/// k-means run parameters. The convergence criterion is the maximum Euclidean
/// centroid displacement falling below tol; it must hold for `patience`
/// consecutive iterations (the counter resets on any violation) before the
/// run stops.
struct KMeansConfig {
    int k = 2;
    int max_iter = 300;
    int patience = 3;
    double tol = 1e-4;
    DistanceMode mode = DistanceMode::ClassicalEuclidean;
    EncodingConfig encoding;
    DistanceForm distance_form = DistanceForm::Weighted;
    bool weighted_dissim = false;
    uint64_t seed = 0;
    InitMethod init = InitMethod::QuantumInspired;
};

struct ClusteringResult {
    std::vector<int> assignments;  // from the last completed assignment phase
    Matrix centroids;              // last updated set
    int n_iterations = 0;
    std::vector<double> sse_trace;
    bool converged = false;
};

/// Resolves the full assignment metric for a config, including the hybrid
/// feature pair when the encoding calls for one.
AssignmentMetric resolve_metric(const ScaledDataset& data, const KMeansConfig& cfg);

/// Nearest-centroid assignment under the metric; ties break toward the
/// lowest cluster index.
std::vector<int> assign_clusters(const ScaledDataset& data, const Matrix& centroids, const AssignmentMetric& metric);

/// Mean of the assigned points per cluster; an empty cluster keeps its
/// previous centroid.
Matrix update_centroids(const ScaledDataset& data, std::span<const int> assignments, int k, const Matrix& previous);

/// Draws k distinct data rows as initial centroids: the first uniformly, each
/// further one with probability proportional to the squared configured
/// distance to its nearest already-chosen centroid. Falls back to uniform
/// sampling over the remaining rows when every weight vanishes.
Matrix quantum_inspired_init(const ScaledDataset& data, const KMeansConfig& cfg, std::mt19937_64& rng);

/// Full run: init, then alternate assignment and update until the patience
/// rule fires or max_iter is exhausted (converged = false in that case).
ClusteringResult kmeans_run(const ScaledDataset& data, const KMeansConfig& cfg);

/// Same loop from explicit initial centroids (cfg.seed and cfg.init unused).
ClusteringResult kmeans_run_from(const ScaledDataset& data, const KMeansConfig& cfg, Matrix initial_centroids);

/// Within-cluster sum of squared Euclidean distances.
double sse(const ScaledDataset& data, std::span<const int> assignments, const Matrix& centroids);

}  // namespace qikm
