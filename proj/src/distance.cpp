#include "qikm/distance.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qikm {

namespace {

void require_same_length(std::span<const double> x, std::span<const double> c) {
    if (x.size() != c.size()) throw std::invalid_argument("vector length mismatch");
}

}  // namespace

Fidelity::Fidelity(double value) : value_(value) {
    if (value < -1e-10 || value > 1.0 + 1e-10) throw std::invalid_argument("fidelity out of range");
    if (value_ < 0.0) value_ = 0.0;
    if (value_ > 1.0) value_ = 1.0;
}

Fidelity fidelity_angle(std::span<const double> x, std::span<const double> c) {
    require_same_length(x, c);
    double f = 1.0;
    for (size_t k = 0; k < x.size(); ++k) {
        const double theta = theta_from_diff(x[k] - c[k]).radians;
        const double ch = std::cos(theta / 2.0);
        f *= ch * ch;
    }
    return Fidelity(f);
}

Fidelity fidelity_amplitude(std::span<const double> x, std::span<const double> c) {
    require_same_length(x, c);
    double dot = 0.0, nx = 0.0, nc = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        dot += x[k] * c[k];
        nx += x[k] * x[k];
        nc += c[k] * c[k];
    }
    if (nx <= 0.0 || nc <= 0.0) return Fidelity(nx <= 0.0 && nc <= 0.0 ? 1.0 : 0.0);
    return Fidelity((dot * dot) / (nx * nc));
}

Fidelity fidelity_hybrid(std::span<const double> x, std::span<const double> c, std::pair<int, int> pair) {
    require_same_length(x, c);
    const int m = static_cast<int>(x.size());
    auto [p0, p1] = pair;
    if (p0 == p1 || p0 < 0 || p1 < 0 || p0 >= m || p1 >= m) throw std::invalid_argument("invalid feature pair");

    const double xs[2] = {x[p0], x[p1]};
    const double cs[2] = {c[p0], c[p1]};
    const Fidelity pair_f = fidelity_amplitude(xs, cs);

    double rest_f = 1.0;
    for (int k = 0; k < m; ++k) {
        if (k == p0 || k == p1) continue;
        const double theta = theta_from_diff(x[k] - c[k]).radians;
        const double ch = std::cos(theta / 2.0);
        rest_f *= ch * ch;
    }
    return Fidelity(pair_f.value() * rest_f);
}

Fidelity fidelity_oracle(const QuantumState& a, const QuantumState& b) {
    return Fidelity(std::norm(inner_product(a, b)));
}

double swap_test_p0(Fidelity f) { return (1.0 + f.value()) / 2.0; }

double bures_distance(Fidelity f) { return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(f.value()))); }

double trace_distance_pure(Fidelity f) { return std::sqrt(std::max(0.0, 1.0 - f.value())); }

double euclidean_distance(std::span<const double> x, std::span<const double> c) {
    require_same_length(x, c);
    double sum = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        const double d = x[k] - c[k];
        sum += d * d;
    }
    return std::sqrt(sum);
}

namespace {

Fidelity mode_fidelity(std::span<const double> x, std::span<const double> c, DistanceMode mode,
                       const std::optional<std::pair<int, int>>& pair) {
    switch (mode) {
        case DistanceMode::QuantumAngle: return fidelity_angle(x, c);
        case DistanceMode::QuantumAmplitude: return fidelity_amplitude(x, c);
        case DistanceMode::QuantumHybrid:
            if (!pair) throw std::invalid_argument("hybrid mode requires a feature pair");
            return fidelity_hybrid(x, c, *pair);
        case DistanceMode::ClassicalEuclidean: break;
    }
    throw std::invalid_argument("not a quantum distance mode");
}

}  // namespace

double quantum_distance(std::span<const double> x, std::span<const double> c, DistanceMode mode,
                        std::optional<std::pair<int, int>> pair) {
    const Fidelity f = mode_fidelity(x, c, mode, pair);
    return 2.0 * f.value() * euclidean_distance(x, c);
}

double assignment_distance(std::span<const double> x, std::span<const double> c, const AssignmentMetric& metric) {
    if (metric.mode == DistanceMode::ClassicalEuclidean) return euclidean_distance(x, c);

    const Fidelity f = mode_fidelity(x, c, metric.mode, metric.hybrid_pair);
    switch (metric.form) {
        case DistanceForm::Weighted:
            if (metric.weighted_dissim) return 2.0 * (1.0 - f.value()) * euclidean_distance(x, c);
            return 2.0 * f.value() * euclidean_distance(x, c);
        case DistanceForm::Bures: return bures_distance(f);
        case DistanceForm::Trace: return trace_distance_pure(f);
    }
    throw std::invalid_argument("unknown distance form");
}

}  // namespace qikm
