#pragma once

#include <optional>
#include <span>
#include <utility>

#include "qikm/encoding.hpp"
#include "qikm/qstate.hpp"

namespace qikm {

/// Pure-state fidelity |<psi|phi>|^2. Values within 1e-10 of [0, 1] are
/// clamped onto the interval; anything further out is rejected.
class Fidelity {
public:
    explicit Fidelity(double value);
    double value() const { return value_; }

private:
    double value_;
};

enum class DistanceMode { ClassicalEuclidean, QuantumAngle, QuantumAmplitude, QuantumHybrid };

/// How a fidelity becomes the assignment distance:
///   Weighted  2 * F * ||x - c||   (as stated; larger fidelity widens it)
///   Bures     sqrt(2 - 2 sqrt(F))
///   Trace     sqrt(1 - F)
/// Bures and Trace are both strictly decreasing in F, so they always induce
/// the same cluster assignments.
enum class DistanceForm { Weighted, Bures, Trace };

/// Closed-form fidelity of the angle encoding applied to x - c:
/// prod_k cos^2(theta_k / 2) with theta_k = ((x_k - c_k) + 1) * pi / 2.
/// Equal vectors give 0.5^M, not 1; the map is asymmetric in (x, c).
Fidelity fidelity_angle(std::span<const double> x, std::span<const double> c);

/// Squared cosine similarity (x . c)^2 / (|x|^2 |c|^2). An all-zero operand
/// is undefined under amplitude encoding; by extension the fidelity is 1 when
/// both operands are all-zero and 0 when exactly one is.
Fidelity fidelity_amplitude(std::span<const double> x, std::span<const double> c);

/// Product of the amplitude fidelity on the pair components and the angle
/// fidelity on the remaining M - 2 components.
Fidelity fidelity_hybrid(std::span<const double> x, std::span<const double> c, std::pair<int, int> pair);

/// |<a|b>|^2 on explicit statevectors. Brute-force reference for the closed
/// forms above.
Fidelity fidelity_oracle(const QuantumState& a, const QuantumState& b);

/// Swap-test ancilla-zero probability (1 + F) / 2.
double swap_test_p0(Fidelity f);

/// sqrt(2 - 2 sqrt(F)), in [0, sqrt(2)].
double bures_distance(Fidelity f);

/// Pure-state trace distance sqrt(1 - F), in [0, 1].
double trace_distance_pure(Fidelity f);

double euclidean_distance(std::span<const double> x, std::span<const double> c);

/// Fidelity-weighted distance 2 * F * ||x - c|| with F chosen by mode.
/// Hybrid mode requires the feature pair.
double quantum_distance(std::span<const double> x, std::span<const double> c, DistanceMode mode,
                        std::optional<std::pair<int, int>> pair = std::nullopt);

/// Full assignment metric: mode picks the fidelity, form maps it to a
/// distance. weighted_dissim swaps the Weighted form for 2 * (1 - F) * ||x - c||.
struct AssignmentMetric {
    DistanceMode mode = DistanceMode::ClassicalEuclidean;
    DistanceForm form = DistanceForm::Weighted;
    bool weighted_dissim = false;
    std::optional<std::pair<int, int>> hybrid_pair;
};

double assignment_distance(std::span<const double> x, std::span<const double> c, const AssignmentMetric& metric);

}  // namespace qikm
