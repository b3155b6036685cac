#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qikm/matrix.hpp"
#include "qikm/qstate.hpp"

namespace qikm {

/// Feature matrix as ingested: n samples x M features plus integer class ids.
struct RawDataset {
    Matrix rows;
    std::vector<int> labels;
    std::vector<std::string> feature_names;
    std::string name;

    int n() const { return rows.rows(); }
    int m() const { return rows.cols(); }
};

/// Dataset after per-feature MinMax rescaling into [0, 1]. Keeps the original
/// per-feature min/max so spreads stay available after scaling.
struct ScaledDataset {
    Matrix rows;
    std::vector<double> per_feature_min;
    std::vector<double> per_feature_max;
    std::vector<int> labels;
    std::vector<std::string> feature_names;
    std::string name;

    int n() const { return rows.rows(); }
    int m() const { return rows.cols(); }
};

enum class EncodingKind { Angle, Amplitude, Hybrid };
enum class OrderingStat { Spread, Skewness, Kurtosis };
enum class OrderingDirection { Ascending, Descending };

/// Which encoding to apply; the ordering fields pick the amplitude-encoded
/// feature pair and are only consulted for the hybrid kind.
struct EncodingConfig {
    EncodingKind kind = EncodingKind::Angle;
    OrderingStat ordering_stat = OrderingStat::Kurtosis;
    OrderingDirection ordering_direction = OrderingDirection::Ascending;
};

/// Per-feature statistics used to rank features for hybrid encoding.
/// Spread is max - min of the raw values; variance, skewness and kurtosis are
/// population moments of the scaled values (kurtosis is excess, m4/m2^2 - 3).
/// A constant feature has skewness and kurtosis 0 by convention.
struct FeatureStats {
    double spread = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
};

/// Rescales each feature to [0, 1] with (x - min) / (max - min).
/// A constant feature maps to 0.
ScaledDataset minmax_fit_transform(const RawDataset& raw);

/// theta = (d + 1) * pi / 2, mapping a scaled difference in [-1, 1] onto
/// [0, pi]. Throws "unscaled difference" when |d| > 1 + 1e-9.
RotationAngle theta_from_diff(double d);

/// Angle encoding of a difference vector: one qubit per component, each
/// rotated by theta_from_diff. Product state, no entangling gates.
QuantumState encode_angle(std::span<const double> diff);

/// Amplitude encoding: zero-pads to the next power of two and L2-normalizes.
/// Throws "unencodable zero vector" when every entry is zero.
QuantumState encode_amplitude(std::span<const double> v);

/// Statistics per feature; requires n >= 4 so kurtosis is defined.
std::vector<FeatureStats> feature_stats(const ScaledDataset& scaled);

/// Indices of the two features ranked first under the configured statistic
/// and direction. Ties break toward the lower feature index. Requires M >= 3.
std::pair<int, int> select_hybrid_pair(const std::vector<FeatureStats>& stats, const EncodingConfig& config);

/// Hybrid encoding on M - 1 qubits: qubit 0 amplitude-encodes the selected
/// pair of components of x, the remaining qubits angle-encode diff (the
/// differences of the non-pair components).
QuantumState encode_hybrid(std::span<const double> x, std::pair<int, int> pair, std::span<const double> diff);

}  // namespace qikm
