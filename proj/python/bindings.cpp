#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qikm/bench.hpp"
#include "qikm/clustering.hpp"
#include "qikm/datasets.hpp"
#include "qikm/distance.hpp"
#include "qikm/encoding.hpp"
#include "qikm/metrics.hpp"
#include "qikm/qstate.hpp"

namespace py = pybind11;
using namespace qikm;

namespace {

Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    const int m = n > 0 ? static_cast<int>(rows[0].size()) : 0;
    Matrix out(n, m);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != m) throw std::invalid_argument("ragged row matrix");
        for (int j = 0; j < m; ++j) out.at(i, j) = rows[i][j];
    }
    return out;
}

std::vector<std::vector<double>> rows_from_matrix(const Matrix& m) {
    std::vector<std::vector<double>> out(m.rows());
    for (int i = 0; i < m.rows(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
    return out;
}

std::optional<std::pair<int, int>> to_pair(py::object pair) {
    if (pair.is_none()) return std::nullopt;
    return pair.cast<std::pair<int, int>>();
}

}  // namespace

PYBIND11_MODULE(qikm, m) {
    m.doc() = "Quantum-inspired k-means clustering and benchmark tools";

    py::class_<QuantumState>(m, "QuantumState")
        .def(py::init<std::vector<Amplitude>>(), py::arg("amplitudes"))
        .def_property_readonly("n_qubits", &QuantumState::n_qubits)
        .def_property_readonly("amplitudes", &QuantumState::amplitudes)
        .def("__len__", &QuantumState::dim);

    m.def("zero_state", &zero_state, py::arg("n_qubits"));
    m.def(
        "apply_ry",
        [](const QuantumState& s, int qubit, double theta) { return apply_ry(s, qubit, RotationAngle(theta)); },
        py::arg("state"), py::arg("qubit"), py::arg("theta"));
    m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"));

    py::enum_<EncodingKind>(m, "EncodingKind")
        .value("Angle", EncodingKind::Angle)
        .value("Amplitude", EncodingKind::Amplitude)
        .value("Hybrid", EncodingKind::Hybrid);
    py::enum_<OrderingStat>(m, "OrderingStat")
        .value("Spread", OrderingStat::Spread)
        .value("Skewness", OrderingStat::Skewness)
        .value("Kurtosis", OrderingStat::Kurtosis);
    py::enum_<OrderingDirection>(m, "OrderingDirection")
        .value("Ascending", OrderingDirection::Ascending)
        .value("Descending", OrderingDirection::Descending);
    py::enum_<DistanceMode>(m, "DistanceMode")
        .value("ClassicalEuclidean", DistanceMode::ClassicalEuclidean)
        .value("QuantumAngle", DistanceMode::QuantumAngle)
        .value("QuantumAmplitude", DistanceMode::QuantumAmplitude)
        .value("QuantumHybrid", DistanceMode::QuantumHybrid);
    py::enum_<DistanceForm>(m, "DistanceForm")
        .value("Weighted", DistanceForm::Weighted)
        .value("Bures", DistanceForm::Bures)
        .value("Trace", DistanceForm::Trace);
    py::enum_<InitMethod>(m, "InitMethod")
        .value("Random", InitMethod::Random)
        .value("QuantumInspired", InitMethod::QuantumInspired);

    py::class_<EncodingConfig>(m, "EncodingConfig")
        .def(py::init([](EncodingKind kind, OrderingStat stat, OrderingDirection direction) {
                 return EncodingConfig{kind, stat, direction};
             }),
             py::arg("kind") = EncodingKind::Angle, py::arg("ordering_stat") = OrderingStat::Kurtosis,
             py::arg("ordering_direction") = OrderingDirection::Ascending)
        .def_readwrite("kind", &EncodingConfig::kind)
        .def_readwrite("ordering_stat", &EncodingConfig::ordering_stat)
        .def_readwrite("ordering_direction", &EncodingConfig::ordering_direction);

    py::class_<FeatureStats>(m, "FeatureStats")
        .def_readonly("spread", &FeatureStats::spread)
        .def_readonly("variance", &FeatureStats::variance)
        .def_readonly("skewness", &FeatureStats::skewness)
        .def_readonly("kurtosis", &FeatureStats::kurtosis);

    py::class_<RawDataset>(m, "RawDataset")
        .def(py::init([](const std::vector<std::vector<double>>& rows, std::vector<int> labels,
                         std::string name) {
                 RawDataset d;
                 d.rows = matrix_from_rows(rows);
                 d.labels = std::move(labels);
                 d.name = std::move(name);
                 d.feature_names.resize(d.m());
                 return d;
             }),
             py::arg("rows"), py::arg("labels"), py::arg("name") = "dataset")
        .def_property_readonly("rows", [](const RawDataset& d) { return rows_from_matrix(d.rows); })
        .def_readonly("labels", &RawDataset::labels)
        .def_readonly("feature_names", &RawDataset::feature_names)
        .def_readonly("name", &RawDataset::name)
        .def_property_readonly("n", &RawDataset::n)
        .def_property_readonly("m", &RawDataset::m);

    py::class_<ScaledDataset>(m, "ScaledDataset")
        .def_property_readonly("rows", [](const ScaledDataset& d) { return rows_from_matrix(d.rows); })
        .def_readonly("labels", &ScaledDataset::labels)
        .def_readonly("per_feature_min", &ScaledDataset::per_feature_min)
        .def_readonly("per_feature_max", &ScaledDataset::per_feature_max)
        .def_readonly("name", &ScaledDataset::name)
        .def_property_readonly("n", &ScaledDataset::n)
        .def_property_readonly("m", &ScaledDataset::m);

    m.def("minmax_fit_transform", &minmax_fit_transform, py::arg("raw"));
    m.def("theta_from_diff", [](double d) { return theta_from_diff(d).radians; }, py::arg("d"));
    m.def("encode_angle", [](const std::vector<double>& diff) { return encode_angle(diff); }, py::arg("diff"));
    m.def("encode_amplitude", [](const std::vector<double>& v) { return encode_amplitude(v); }, py::arg("v"));
    m.def("feature_stats", &feature_stats, py::arg("scaled"));
    m.def("select_hybrid_pair", &select_hybrid_pair, py::arg("stats"), py::arg("config"));
    m.def(
        "encode_hybrid",
        [](const std::vector<double>& x, std::pair<int, int> pair, const std::vector<double>& diff) {
            return encode_hybrid(x, pair, diff);
        },
        py::arg("x"), py::arg("pair"), py::arg("diff"));

    m.def(
        "fidelity_angle",
        [](const std::vector<double>& x, const std::vector<double>& c) { return fidelity_angle(x, c).value(); },
        py::arg("x"), py::arg("c"));
    m.def(
        "fidelity_amplitude",
        [](const std::vector<double>& x, const std::vector<double>& c) {
            return fidelity_amplitude(x, c).value();
        },
        py::arg("x"), py::arg("c"));
    m.def(
        "fidelity_hybrid",
        [](const std::vector<double>& x, const std::vector<double>& c, std::pair<int, int> pair) {
            return fidelity_hybrid(x, c, pair).value();
        },
        py::arg("x"), py::arg("c"), py::arg("pair"));
    m.def(
        "fidelity_oracle", [](const QuantumState& a, const QuantumState& b) { return fidelity_oracle(a, b).value(); },
        py::arg("a"), py::arg("b"));
    m.def("swap_test_p0", [](double f) { return swap_test_p0(Fidelity(f)); }, py::arg("fidelity"));
    m.def("bures_distance", [](double f) { return bures_distance(Fidelity(f)); }, py::arg("fidelity"));
    m.def(
        "trace_distance_pure", [](double f) { return trace_distance_pure(Fidelity(f)); }, py::arg("fidelity"));
    m.def(
        "euclidean_distance",
        [](const std::vector<double>& x, const std::vector<double>& c) { return euclidean_distance(x, c); },
        py::arg("x"), py::arg("c"));
    m.def(
        "quantum_distance",
        [](const std::vector<double>& x, const std::vector<double>& c, DistanceMode mode, py::object pair) {
            return quantum_distance(x, c, mode, to_pair(pair));
        },
        py::arg("x"), py::arg("c"), py::arg("mode"), py::arg("pair") = py::none());

    py::class_<KMeansConfig>(m, "KMeansConfig")
        .def(py::init<>())
        .def_readwrite("k", &KMeansConfig::k)
        .def_readwrite("max_iter", &KMeansConfig::max_iter)
        .def_readwrite("patience", &KMeansConfig::patience)
        .def_readwrite("tol", &KMeansConfig::tol)
        .def_readwrite("mode", &KMeansConfig::mode)
        .def_readwrite("encoding", &KMeansConfig::encoding)
        .def_readwrite("distance_form", &KMeansConfig::distance_form)
        .def_readwrite("weighted_dissim", &KMeansConfig::weighted_dissim)
        .def_readwrite("seed", &KMeansConfig::seed)
        .def_readwrite("init", &KMeansConfig::init);

    py::class_<ClusteringResult>(m, "ClusteringResult")
        .def_readonly("assignments", &ClusteringResult::assignments)
        .def_property_readonly("centroids",
                               [](const ClusteringResult& r) { return rows_from_matrix(r.centroids); })
        .def_readonly("n_iterations", &ClusteringResult::n_iterations)
        .def_readonly("sse_trace", &ClusteringResult::sse_trace)
        .def_readonly("converged", &ClusteringResult::converged);

    m.def("kmeans_run", &kmeans_run, py::arg("data"), py::arg("config"));

    m.def(
        "rand_index",
        [](const std::vector<int>& t, const std::vector<int>& p) { return rand_index(contingency(t, p)); },
        py::arg("true_labels"), py::arg("pred_labels"));
    m.def(
        "adjusted_rand_index",
        [](const std::vector<int>& t, const std::vector<int>& p) {
            return adjusted_rand_index(contingency(t, p));
        },
        py::arg("true_labels"), py::arg("pred_labels"));
    m.def(
        "silhouette_score",
        [](const ScaledDataset& d, const std::vector<int>& a) { return silhouette_score(d, a); },
        py::arg("data"), py::arg("assignments"));

    m.def(
        "load_dataset",
        [](const std::string& name, const std::filesystem::path& data_dir) {
            return load(dataset_spec(dataset_id_from_name(name), data_dir));
        },
        py::arg("name"), py::arg("data_dir") = std::filesystem::path("data"));
    m.def("dataset_names", [] {
        std::vector<std::string> names;
        for (DatasetId id : all_dataset_ids()) names.push_back(dataset_name(id));
        return names;
    });
}
