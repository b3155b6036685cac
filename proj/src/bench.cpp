#include "qikm/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <span>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qikm/metrics.hpp"
#include "qikm/rng.hpp"

namespace qikm {

namespace {

std::string fmt_g(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_fixed(double v, int digits) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

double median(std::vector<double> values) {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(values.begin(), values.end());
    const size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

/// Index of the restart picked by the selection rule, within one seed group.
size_t select_run(const std::vector<RunRecord>& runs, std::span<const size_t> group, Selection rule) {
    switch (rule) {
        case Selection::BestSSE: {
            size_t best = group[0];
            for (size_t idx : group)
                if (runs[idx].sse < runs[best].sse) best = idx;
            return best;
        }
        case Selection::BestARI: {
            size_t best = group[0];
            for (size_t idx : group)
                if (runs[idx].ari > runs[best].ari) best = idx;
            return best;
        }
        case Selection::MedianARI: {
            std::vector<size_t> order(group.begin(), group.end());
            std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return runs[a].ari < runs[b].ari; });
            return order[(order.size() - 1) / 2];  // lower median is an actual run
        }
    }
    throw std::invalid_argument("unknown selection rule");
}

uint64_t derive_run_seed(uint64_t seed, int restart) {
    return splitmix64(seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(restart + 1));
}

}  // namespace

MethodSpec method_from_name(const std::string& name) {
    MethodSpec spec;
    spec.name = name;
    if (name == "classical") {
        spec.mode = DistanceMode::ClassicalEuclidean;
    } else if (name == "angle") {
        spec.mode = DistanceMode::QuantumAngle;
        spec.encoding.kind = EncodingKind::Angle;
    } else if (name == "amplitude") {
        spec.mode = DistanceMode::QuantumAmplitude;
        spec.encoding.kind = EncodingKind::Amplitude;
    } else if (name == "hybrid") {
        spec.mode = DistanceMode::QuantumHybrid;
        spec.encoding.kind = EncodingKind::Hybrid;
    } else {
        throw std::invalid_argument("unknown method '" + name + "' (expected classical|angle|amplitude|hybrid)");
    }
    return spec;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.methods.empty()) throw std::invalid_argument("no methods configured");
    if (cfg.seeds.empty()) throw std::invalid_argument("no seeds configured");
    if (cfg.restarts_per_seed < 1) throw std::invalid_argument("restarts_per_seed must be positive");

    const RawDataset raw = load(cfg.dataset);
    const ScaledDataset data = minmax_fit_transform(raw);
    const int label_classes = 1 + *std::max_element(data.labels.begin(), data.labels.end());
    const int k = cfg.k_override.value_or(label_classes);

    ExperimentReport report;
    report.dataset = data.name;
    report.source_file = cfg.dataset.source_path.filename().string();
    report.checksum = checksum(cfg.dataset);
    report.n = data.n();
    report.m = data.m();
    report.k_used = k;
    report.restarts_per_seed = cfg.restarts_per_seed;
    report.selection = cfg.selection;

    struct Task {
        size_t method_idx;
        size_t seed_idx;
        int restart;
    };
    std::vector<Task> tasks;
    for (size_t mi = 0; mi < cfg.methods.size(); ++mi)
        for (size_t si = 0; si < cfg.seeds.size(); ++si)
            for (int r = 0; r < cfg.restarts_per_seed; ++r) tasks.push_back({mi, si, r});

    report.runs.resize(tasks.size());

    auto execute = [&](const Task& task, RunRecord& rec) {
        const MethodSpec& method = cfg.methods[task.method_idx];
        KMeansConfig kc;
        kc.k = k;
        kc.max_iter = cfg.max_iter;
        kc.patience = cfg.patience;
        kc.tol = cfg.tol;
        kc.mode = method.mode;
        kc.encoding = method.encoding;
        kc.distance_form = method.distance_form;
        kc.weighted_dissim = method.weighted_dissim;
        kc.init = method.init;
        kc.seed = derive_run_seed(cfg.seeds[task.seed_idx], task.restart);

        const auto start = std::chrono::steady_clock::now();
        const ClusteringResult result = kmeans_run(data, kc);
        const auto stop = std::chrono::steady_clock::now();

        rec.method = method.name;
        rec.seed = cfg.seeds[task.seed_idx];
        rec.restart = task.restart;
        rec.run_seed = kc.seed;
        rec.k = k;
        rec.n_iterations = result.n_iterations;
        rec.converged = result.converged;
        rec.sse = sse(data, result.assignments, result.centroids);
        rec.ari = adjusted_rand_index(contingency(data.labels, result.assignments));
        try {
            rec.silhouette = silhouette_score(data, result.assignments);
        } catch (const std::invalid_argument&) {
            // Degenerate partition (every point in one cluster).
            rec.silhouette = std::numeric_limits<double>::quiet_NaN();
        }
        rec.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    };

    const int jobs = std::clamp<int>(cfg.jobs, 1, static_cast<int>(tasks.size()));
    if (jobs == 1) {
        for (size_t t = 0; t < tasks.size(); ++t) execute(tasks[t], report.runs[t]);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1))
                    execute(tasks[t], report.runs[t]);
            });
        }
        for (auto& worker : workers) worker.join();
    }

    // Selection per (method, seed) group; groups are contiguous by construction.
    for (size_t mi = 0; mi < cfg.methods.size(); ++mi) {
        std::vector<double> selected_ari;
        std::vector<double> selected_ss;
        for (size_t si = 0; si < cfg.seeds.size(); ++si) {
            std::vector<size_t> group;
            for (int r = 0; r < cfg.restarts_per_seed; ++r)
                group.push_back((mi * cfg.seeds.size() + si) * cfg.restarts_per_seed + r);
            const size_t pick = select_run(report.runs, group, cfg.selection);
            report.runs[pick].selected = true;
            selected_ari.push_back(report.runs[pick].ari);
            selected_ss.push_back(report.runs[pick].silhouette);
        }
        report.summary.push_back({cfg.methods[mi].name, median(selected_ari), median(std::move(selected_ss))});
    }
    return report;
}

namespace {

void write_markdown(const ExperimentReport& r, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());

    out << "# Benchmark: " << r.dataset << "\n\n";
    out << "- source file: " << r.source_file << "\n";
    out << "- sha256: " << r.checksum << "\n";
    out << "- samples: " << r.n << ", features: " << r.m << ", k: " << r.k_used << "\n";
    out << "- restarts per seed: " << r.restarts_per_seed << ", selection: " << selection_name(r.selection)
        << "\n\n";

    out << "| Figure of merit |";
    for (const auto& s : r.summary) out << ' ' << s.method << " |";
    out << "\n|---|";
    for (size_t i = 0; i < r.summary.size(); ++i) out << "---|";
    out << "\n| Silhouette Score |";
    for (const auto& s : r.summary) out << ' ' << fmt_fixed(s.silhouette_median, 4) << " |";
    out << "\n| Adjusted Rand Index |";
    for (const auto& s : r.summary) out << ' ' << fmt_fixed(s.ari_median, 4) << " |";
    out << "\n\n## Selected runs\n\n";
    out << "| method | seed | restart | iterations | converged | sse | ari | silhouette | runtime_ms |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& run : r.runs) {
        if (!run.selected) continue;
        out << "| " << run.method << " | " << run.seed << " | " << run.restart << " | " << run.n_iterations
            << " | " << (run.converged ? "yes" : "no") << " | " << fmt_fixed(run.sse, 6) << " | "
            << fmt_fixed(run.ari, 4) << " | " << fmt_fixed(run.silhouette, 4) << " | "
            << fmt_fixed(run.runtime_ms, 2) << " |\n";
    }
}

void write_csv(const ExperimentReport& r, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());

    // runtime_ms stays last: it is the only non-reproducible column.
    out << "dataset,checksum,method,seed,restart,run_seed,k,iterations,converged,selected,sse,ari,"
           "silhouette,runtime_ms\n";
    for (const auto& run : r.runs) {
        out << r.dataset << ',' << r.checksum << ',' << run.method << ',' << run.seed << ',' << run.restart
            << ',' << run.run_seed << ',' << run.k << ',' << run.n_iterations << ','
            << (run.converged ? 1 : 0) << ',' << (run.selected ? 1 : 0) << ',' << fmt_g(run.sse) << ','
            << fmt_g(run.ari) << ',' << fmt_g(run.silhouette) << ',' << fmt_g(run.runtime_ms) << '\n';
    }
}

void write_jsonl(const ExperimentReport& r, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());

    for (const auto& run : r.runs) {
        nlohmann::ordered_json j;
        j["dataset"] = r.dataset;
        j["checksum"] = r.checksum;
        j["method"] = run.method;
        j["seed"] = run.seed;
        j["restart"] = run.restart;
        j["run_seed"] = run.run_seed;
        j["k"] = run.k;
        j["iterations"] = run.n_iterations;
        j["converged"] = run.converged;
        j["selected"] = run.selected;
        j["sse"] = run.sse;
        j["ari"] = run.ari;
        if (std::isnan(run.silhouette))
            j["silhouette"] = nullptr;
        else
            j["silhouette"] = run.silhouette;
        j["runtime_ms"] = run.runtime_ms;
        out << j.dump() << '\n';
    }
}

}  // namespace

void emit_report(const ExperimentReport& report, const std::vector<ReportFormat>& formats,
                 const std::filesystem::path& output_dir) {
    if (report.runs.empty()) throw std::invalid_argument("empty report");
    std::filesystem::create_directories(output_dir);
    for (ReportFormat f : formats) {
        switch (f) {
            case ReportFormat::Markdown: write_markdown(report, output_dir / "report.md"); break;
            case ReportFormat::Csv: write_csv(report, output_dir / "runs.csv"); break;
            case ReportFormat::JsonLines: write_jsonl(report, output_dir / "runs.jsonl"); break;
        }
    }
}

std::string selection_name(Selection s) {
    switch (s) {
        case Selection::BestSSE: return "best-sse";
        case Selection::BestARI: return "best-ari";
        case Selection::MedianARI: return "median-ari";
    }
    throw std::invalid_argument("unknown selection");
}

Selection selection_from_name(const std::string& name) {
    if (name == "best-sse") return Selection::BestSSE;
    if (name == "best-ari") return Selection::BestARI;
    if (name == "median-ari") return Selection::MedianARI;
    throw std::invalid_argument("unknown selection '" + name + "'");
}

std::string distance_form_name(DistanceForm f) {
    switch (f) {
        case DistanceForm::Weighted: return "weighted";
        case DistanceForm::Bures: return "bures";
        case DistanceForm::Trace: return "trace";
    }
    throw std::invalid_argument("unknown distance form");
}

DistanceForm distance_form_from_name(const std::string& name) {
    if (name == "weighted") return DistanceForm::Weighted;
    if (name == "bures") return DistanceForm::Bures;
    if (name == "trace") return DistanceForm::Trace;
    throw std::invalid_argument("unknown distance form '" + name + "'");
}

std::string init_name(InitMethod m) {
    return m == InitMethod::Random ? "random" : "quantum";
}

InitMethod init_from_name(const std::string& name) {
    if (name == "random") return InitMethod::Random;
    if (name == "quantum") return InitMethod::QuantumInspired;
    throw std::invalid_argument("unknown init '" + name + "'");
}

std::string ordering_stat_name(OrderingStat s) {
    switch (s) {
        case OrderingStat::Spread: return "spread";
        case OrderingStat::Skewness: return "skewness";
        case OrderingStat::Kurtosis: return "kurtosis";
    }
    throw std::invalid_argument("unknown ordering stat");
}

OrderingStat ordering_stat_from_name(const std::string& name) {
    if (name == "spread") return OrderingStat::Spread;
    if (name == "skewness") return OrderingStat::Skewness;
    if (name == "kurtosis") return OrderingStat::Kurtosis;
    throw std::invalid_argument("unknown ordering stat '" + name + "'");
}

std::string mode_name(DistanceMode m) {
    switch (m) {
        case DistanceMode::ClassicalEuclidean: return "euclidean";
        case DistanceMode::QuantumAngle: return "angle";
        case DistanceMode::QuantumAmplitude: return "amplitude";
        case DistanceMode::QuantumHybrid: return "hybrid";
    }
    throw std::invalid_argument("unknown distance mode");
}

}  // namespace qikm
