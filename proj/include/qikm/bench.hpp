#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qikm/clustering.hpp"
#include "qikm/datasets.hpp"

namespace qikm {

/// How the headline run is picked from the restarts of one seed.
/// BestSSE is metric-blind: lowest within-cluster SSE, never the ARI.
enum class Selection { BestSSE, BestARI, MedianARI };

enum class ReportFormat { Markdown, Csv, JsonLines };

/// One benchmarked method: a distance mode plus everything that shapes it.
struct MethodSpec {
    std::string name;
    DistanceMode mode = DistanceMode::ClassicalEuclidean;
    EncodingConfig encoding;
    DistanceForm distance_form = DistanceForm::Weighted;
    bool weighted_dissim = false;
    InitMethod init = InitMethod::QuantumInspired;
};

/// Canonical method for a name in {classical, angle, amplitude, hybrid}.
MethodSpec method_from_name(const std::string& name);

struct ExperimentConfig {
    DatasetSpec dataset;
    std::vector<MethodSpec> methods;
    std::vector<uint64_t> seeds;
    int restarts_per_seed = 10;
    Selection selection = Selection::BestSSE;
    std::filesystem::path output_dir;
    std::optional<int> k_override;  // defaults to the dataset's class count
    int max_iter = 300;
    int patience = 3;
    double tol = 1e-4;
    int jobs = 1;
};

struct RunRecord {
    std::string method;
    uint64_t seed = 0;
    int restart = 0;
    uint64_t run_seed = 0;
    int k = 0;
    int n_iterations = 0;
    bool converged = false;
    bool selected = false;
    double sse = 0.0;
    double ari = 0.0;
    double silhouette = 0.0;  // NaN when the final partition has < 2 clusters
    double runtime_ms = 0.0;
};

/// Headline numbers per method: medians over the per-seed selected runs.
struct MethodSummary {
    std::string method;
    double ari_median = 0.0;
    double silhouette_median = 0.0;
};

struct ExperimentReport {
    std::string dataset;
    std::string source_file;
    std::string checksum;
    int n = 0;
    int m = 0;
    int k_used = 0;
    int restarts_per_seed = 0;
    Selection selection = Selection::BestSSE;
    std::vector<RunRecord> runs;  // stable order: method, seed, restart
    std::vector<MethodSummary> summary;
};

/// Loads and scales the dataset, then runs every (method, seed, restart)
/// combination, up to cfg.jobs at a time. Deterministic for a fixed
/// (dataset file, config): worker scheduling cannot reorder results and every
/// run derives its own seed. Wall-clock runtimes are the one exception.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Writes report.md, runs.csv and/or runs.jsonl into output_dir. The
/// runtime_ms column is the only time-dependent field in the machine-readable
/// outputs; everything else is reproducible byte for byte.
void emit_report(const ExperimentReport& report, const std::vector<ReportFormat>& formats,
                 const std::filesystem::path& output_dir);

std::string selection_name(Selection s);
Selection selection_from_name(const std::string& name);
std::string distance_form_name(DistanceForm f);
DistanceForm distance_form_from_name(const std::string& name);
std::string init_name(InitMethod m);
InitMethod init_from_name(const std::string& name);
std::string ordering_stat_name(OrderingStat s);
OrderingStat ordering_stat_from_name(const std::string& name);
std::string mode_name(DistanceMode m);

}  // namespace qikm
