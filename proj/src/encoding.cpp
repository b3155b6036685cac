#include "qikm/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qikm {

namespace {

size_t next_power_of_two(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

double ordering_value(const FeatureStats& s, OrderingStat stat) {
    switch (stat) {
        case OrderingStat::Spread: return s.spread;
        case OrderingStat::Skewness: return s.skewness;
        case OrderingStat::Kurtosis: return s.kurtosis;
    }
    throw std::invalid_argument("unknown ordering statistic");
}

}  // namespace

ScaledDataset minmax_fit_transform(const RawDataset& raw) {
    if (raw.n() < 1 || raw.m() < 1) throw std::invalid_argument("empty dataset");

    const int n = raw.n();
    const int m = raw.m();
    ScaledDataset out;
    out.rows = Matrix(n, m);
    out.per_feature_min.resize(m);
    out.per_feature_max.resize(m);
    out.labels = raw.labels;
    out.feature_names = raw.feature_names;
    out.name = raw.name;

    for (int j = 0; j < m; ++j) {
        double lo = raw.rows.at(0, j);
        double hi = lo;
        for (int i = 1; i < n; ++i) {
            lo = std::min(lo, raw.rows.at(i, j));
            hi = std::max(hi, raw.rows.at(i, j));
        }
        out.per_feature_min[j] = lo;
        out.per_feature_max[j] = hi;
        const double range = hi - lo;
        for (int i = 0; i < n; ++i) {
            // Constant feature maps to 0.
            out.rows.at(i, j) = range > 0.0 ? (raw.rows.at(i, j) - lo) / range : 0.0;
        }
    }
    return out;
}

RotationAngle theta_from_diff(double d) {
    if (std::abs(d) > 1.0 + 1e-9) throw std::invalid_argument("unscaled difference");
    return RotationAngle((d + 1.0) * std::numbers::pi / 2.0);
}

QuantumState encode_angle(std::span<const double> diff) {
    const int m = static_cast<int>(diff.size());
    if (m < 1 || m > kMaxQubits) throw std::invalid_argument("qubit count unsupported");

    // Product state: amplitude of basis state b is the product over qubits of
    // cos(theta_k/2) when bit k is 0 and sin(theta_k/2) when it is 1.
    std::vector<double> cos_half(m);
    std::vector<double> sin_half(m);
    for (int k = 0; k < m; ++k) {
        const double theta = theta_from_diff(diff[k]).radians;
        cos_half[k] = std::cos(theta / 2.0);
        sin_half[k] = std::sin(theta / 2.0);
    }

    std::vector<Amplitude> amps(size_t{1} << m);
    for (size_t b = 0; b < amps.size(); ++b) {
        double prod = 1.0;
        for (int k = 0; k < m; ++k) {
            const bool bit = (b >> (m - 1 - k)) & 1;  // qubit 0 = MSB
            prod *= bit ? sin_half[k] : cos_half[k];
        }
        amps[b] = Amplitude{prod, 0.0};
    }
    return QuantumState(std::move(amps));
}

QuantumState encode_amplitude(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("empty vector");

    double norm_sq = 0.0;
    for (double x : v) norm_sq += x * x;
    if (norm_sq <= 0.0) throw std::invalid_argument("unencodable zero vector");
    const double inv_norm = 1.0 / std::sqrt(norm_sq);

    const size_t dim = std::max<size_t>(2, next_power_of_two(v.size()));
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    for (size_t j = 0; j < v.size(); ++j) amps[j] = Amplitude{v[j] * inv_norm, 0.0};
    return QuantumState(std::move(amps));
}

std::vector<FeatureStats> feature_stats(const ScaledDataset& scaled) {
    const int n = scaled.n();
    if (n < 4) throw std::invalid_argument("feature statistics need at least 4 samples");

    std::vector<FeatureStats> stats(scaled.m());
    for (int j = 0; j < scaled.m(); ++j) {
        double mean = 0.0;
        for (int i = 0; i < n; ++i) mean += scaled.rows.at(i, j);
        mean /= n;

        double m2 = 0.0, m3 = 0.0, m4 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = scaled.rows.at(i, j) - mean;
            const double d2 = d * d;
            m2 += d2;
            m3 += d2 * d;
            m4 += d2 * d2;
        }
        m2 /= n;
        m3 /= n;
        m4 /= n;

        FeatureStats& s = stats[j];
        s.spread = scaled.per_feature_max[j] - scaled.per_feature_min[j];
        s.variance = m2;
        if (m2 > 0.0) {
            s.skewness = m3 / std::pow(m2, 1.5);
            s.kurtosis = m4 / (m2 * m2) - 3.0;
        }
    }
    return stats;
}

std::pair<int, int> select_hybrid_pair(const std::vector<FeatureStats>& stats, const EncodingConfig& config) {
    const int m = static_cast<int>(stats.size());
    if (m < 3) throw std::invalid_argument("hybrid requires >=3 features");

    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    const bool ascending = config.ordering_direction == OrderingDirection::Ascending;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double va = ordering_value(stats[a], config.ordering_stat);
        const double vb = ordering_value(stats[b], config.ordering_stat);
        if (va != vb) return ascending ? va < vb : va > vb;
        return a < b;
    });
    return {order[0], order[1]};
}

QuantumState encode_hybrid(std::span<const double> x, std::pair<int, int> pair, std::span<const double> diff) {
    const int m = static_cast<int>(x.size());
    auto [p0, p1] = pair;
    if (p0 == p1 || p0 < 0 || p1 < 0 || p0 >= m || p1 >= m) throw std::invalid_argument("invalid feature pair");
    if (static_cast<int>(diff.size()) != m - 2) throw std::invalid_argument("difference vector must have M-2 entries");

    const double pair_slice[2] = {x[p0], x[p1]};
    const QuantumState pair_qubit = encode_amplitude(pair_slice);  // throws when both zero

    if (diff.empty()) return pair_qubit;

    const QuantumState rest = encode_angle(diff);

    // Tensor product with the pair qubit as qubit 0 (most significant bit).
    std::vector<Amplitude> amps(pair_qubit.dim() * rest.dim());
    for (size_t i = 0; i < pair_qubit.dim(); ++i)
        for (size_t j = 0; j < rest.dim(); ++j) amps[i * rest.dim() + j] = pair_qubit.amplitude(i) * rest.amplitude(j);
    return QuantumState(std::move(amps));
}

}  // namespace qikm
