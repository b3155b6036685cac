#include "qikm/qstate.hpp"

#include <cmath>
#include <stdexcept>

namespace qikm {

namespace {

bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(size_t n) {
    int bits = 0;
    while (n > 1) {
        n >>= 1;
        ++bits;
    }
    return bits;
}

}  // namespace

RotationAngle::RotationAngle(double r) : radians(r) {
    if (!std::isfinite(r)) throw std::invalid_argument("rotation angle must be finite");
}

QuantumState::QuantumState(std::vector<Amplitude> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2 || !is_power_of_two(amplitudes_.size()))
        throw std::invalid_argument("state dimension must be a power of two >= 2");
    n_qubits_ = log2_exact(amplitudes_.size());
    double n = norm();
    if (std::abs(n - 1.0) > 1e-10) throw std::invalid_argument("state is not normalized");
}

double QuantumState::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

QuantumState zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) throw std::invalid_argument("qubit count unsupported");
    std::vector<Amplitude> amps(size_t{1} << n_qubits, Amplitude{0.0, 0.0});
    amps[0] = Amplitude{1.0, 0.0};
    return QuantumState(std::move(amps));
}

QuantumState apply_ry(const QuantumState& state, int qubit, RotationAngle angle) {
    if (qubit < 0 || qubit >= state.n_qubits()) throw std::out_of_range("qubit index out of range");

    const double c = std::cos(angle.radians / 2.0);
    const double s = std::sin(angle.radians / 2.0);

    // Qubit 0 is the most significant bit of the index.
    const size_t mask = size_t{1} << (state.n_qubits() - 1 - qubit);

    std::vector<Amplitude> amps = state.amplitudes();
    for (size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) continue;
        const size_t j = i | mask;
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[j];
        amps[i] = c * a0 - s * a1;
        amps[j] = s * a0 + c * a1;
    }
    return QuantumState(std::move(amps));
}

Amplitude inner_product(const QuantumState& a, const QuantumState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("state dimension mismatch");
    Amplitude sum{0.0, 0.0};
    for (size_t i = 0; i < a.dim(); ++i) sum += std::conj(a.amplitude(i)) * b.amplitude(i);
    return sum;
}

}  // namespace qikm
