#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "qikm/bench.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitDataError = 2;
constexpr int kExitRuntimeError = 3;

struct RunOptions {
    std::string dataset;
    std::vector<std::string> methods{"classical", "angle", "amplitude", "hybrid"};
    std::vector<uint64_t> seeds{1, 2, 3, 4, 5};
    int restarts = 10;
    std::string selection = "best-sse";
    std::string out_dir = "out";
    std::string data_dir = "data";
    std::vector<std::string> formats{"md", "csv", "jsonl"};
    int jobs = 1;
    int k = 0;  // 0: use the dataset's class count
    int max_iter = 300;
    int patience = 3;
    double tol = 1e-4;
    std::string form = "weighted";
    bool weighted_dissim = false;
    std::string init = "quantum";
    std::string ordering_stat = "kurtosis";
    std::string ordering_direction = "ascending";
};

qikm::ExperimentConfig build_config(const RunOptions& opt) {
    using namespace qikm;

    if (opt.dataset.empty()) throw std::invalid_argument("no dataset selected (--dataset or config file)");

    ExperimentConfig cfg;
    cfg.dataset = dataset_spec(dataset_id_from_name(opt.dataset), opt.data_dir);
    cfg.seeds = opt.seeds;
    cfg.restarts_per_seed = opt.restarts;
    cfg.selection = selection_from_name(opt.selection);
    cfg.output_dir = opt.out_dir;
    if (opt.k > 0) cfg.k_override = opt.k;
    cfg.max_iter = opt.max_iter;
    cfg.patience = opt.patience;
    cfg.tol = opt.tol;
    cfg.jobs = opt.jobs;

    for (const auto& name : opt.methods) {
        MethodSpec method = method_from_name(name);
        method.init = init_from_name(opt.init);
        if (method.mode != DistanceMode::ClassicalEuclidean) {
            method.distance_form = distance_form_from_name(opt.form);
            method.weighted_dissim = opt.weighted_dissim;
        }
        method.encoding.ordering_stat = ordering_stat_from_name(opt.ordering_stat);
        if (opt.ordering_direction == "ascending")
            method.encoding.ordering_direction = OrderingDirection::Ascending;
        else if (opt.ordering_direction == "descending")
            method.encoding.ordering_direction = OrderingDirection::Descending;
        else
            throw std::invalid_argument("unknown ordering direction '" + opt.ordering_direction + "'");
        cfg.methods.push_back(std::move(method));
    }
    return cfg;
}

std::vector<qikm::ReportFormat> parse_formats(const std::vector<std::string>& names) {
    std::vector<qikm::ReportFormat> formats;
    for (const auto& name : names) {
        if (name == "md")
            formats.push_back(qikm::ReportFormat::Markdown);
        else if (name == "csv")
            formats.push_back(qikm::ReportFormat::Csv);
        else if (name == "jsonl")
            formats.push_back(qikm::ReportFormat::JsonLines);
        else
            throw std::invalid_argument("unknown format '" + name + "' (expected md|csv|jsonl)");
    }
    return formats;
}

int cmd_run(const RunOptions& opt) {
    const qikm::ExperimentConfig cfg = build_config(opt);
    const auto formats = parse_formats(opt.formats);

    const qikm::ExperimentReport report = qikm::run_experiment(cfg);
    qikm::emit_report(report, formats, cfg.output_dir);

    std::cout << "dataset " << report.dataset << " (n=" << report.n << ", m=" << report.m
              << ", k=" << report.k_used << ")\n";
    for (const auto& s : report.summary)
        std::cout << "  " << s.method << ": ARI=" << s.ari_median << " SS=" << s.silhouette_median << "\n";
    std::cout << "wrote " << cfg.output_dir.string() << "\n";
    return kExitOk;
}

int cmd_list_datasets(const std::string& data_dir) {
    for (qikm::DatasetId id : qikm::all_dataset_ids()) {
        const qikm::DatasetSpec spec = qikm::dataset_spec(id, data_dir);
        const bool present = std::filesystem::exists(spec.source_path);
        std::cout << qikm::dataset_name(id) << "\t" << spec.source_path.string() << "\t(n=" << spec.expected_n
                  << ", m=" << spec.expected_m << ", k=" << spec.expected_k << ")\t"
                  << (present ? "present" : "MISSING — run tools/fetch_datasets.py") << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& data_dir) {
    bool ok = true;
    for (qikm::DatasetId id : qikm::all_dataset_ids()) {
        const qikm::DatasetSpec spec = qikm::dataset_spec(id, data_dir);
        try {
            const qikm::RawDataset raw = qikm::load(spec);
            std::cout << "ok " << qikm::dataset_name(id) << " n=" << raw.n() << " m=" << raw.m()
                      << " sha256=" << qikm::checksum(spec) << "\n";
        } catch (const std::exception& e) {
            std::cout << "FAIL " << qikm::dataset_name(id) << ": " << e.what() << "\n";
            ok = false;
        }
    }
    return ok ? kExitOk : kExitDataError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-inspired k-means benchmark"};
    app.require_subcommand(1);

    RunOptions opt;
    CLI::App* run = app.add_subcommand("run", "Run a benchmark experiment and emit reports");
    run->set_config("--config", "", "Plain-text config file; keys match the long option names");
    run->add_option("--dataset", opt.dataset, "Dataset id (see list-datasets)");
    run->add_option("--method", opt.methods, "Methods to run: classical|angle|amplitude|hybrid")
        ->delimiter(',');
    run->add_option("--seed", opt.seeds, "Seeds (repeatable)")->delimiter(',');
    run->add_option("--restarts", opt.restarts, "Restarts per seed")->check(CLI::PositiveNumber);
    run->add_option("--selection", opt.selection, "Selection rule: best-sse|best-ari|median-ari");
    run->add_option("--out", opt.out_dir, "Output directory");
    run->add_option("--data-dir", opt.data_dir, "Directory holding the dataset files");
    run->add_option("--format", opt.formats, "Report formats: md|csv|jsonl")->delimiter(',');
    run->add_option("--jobs", opt.jobs, "Concurrent runs")->check(CLI::PositiveNumber);
    run->add_option("--k", opt.k, "Cluster count override (default: dataset class count)");
    run->add_option("--max-iter", opt.max_iter, "Iteration budget per run")->check(CLI::PositiveNumber);
    run->add_option("--patience", opt.patience, "Consecutive convergent iterations required")
        ->check(CLI::Range(1, 10));
    run->add_option("--tol", opt.tol, "Centroid displacement tolerance");
    run->add_option("--form", opt.form, "Quantum distance form: weighted|bures|trace");
    run->add_flag("--weighted-dissim", opt.weighted_dissim, "Use 2*(1-F)*d instead of 2*F*d");
    run->add_option("--init", opt.init, "Centroid initialization: quantum|random");
    run->add_option("--ordering-stat", opt.ordering_stat, "Hybrid pair statistic: spread|skewness|kurtosis");
    run->add_option("--ordering-direction", opt.ordering_direction, "Hybrid pair order: ascending|descending");

    std::string data_dir_list = "data";
    CLI::App* list = app.add_subcommand("list-datasets", "List known datasets and their files");
    list->add_option("--data-dir", data_dir_list, "Directory holding the dataset files");

    std::string data_dir_verify = "data";
    CLI::App* verify = app.add_subcommand("verify", "Check dataset files against expected shapes");
    verify->add_option("--data-dir", data_dir_verify, "Directory holding the dataset files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (run->parsed()) return cmd_run(opt);
        if (list->parsed()) return cmd_list_datasets(data_dir_list);
        if (verify->parsed()) return cmd_verify(data_dir_verify);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::runtime_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
    return kExitConfigError;
}
