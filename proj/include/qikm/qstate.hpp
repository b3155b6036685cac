#pragma once

#include <complex>
#include <vector>

namespace qikm {

using Amplitude = std::complex<double>;

/// Rotation angle in radians. Must be finite; the encoding layer keeps its
/// angles in [0, pi] but this type does not.
struct RotationAngle {
    double radians;

    explicit RotationAngle(double r);
};

/// Pure quantum state on n qubits, stored as 2^n complex amplitudes.
///
/// Convention: qubit 0 is the most significant bit of the basis-state index,
/// so for two qubits the amplitudes are ordered |00>, |01>, |10>, |11> with
/// qubit 0 owning the left bit.
class QuantumState {
public:
    /// Takes ownership of the amplitude vector. Throws if the length is not a
    /// power of two >= 2 or the L2 norm is not 1 within 1e-10.
    explicit QuantumState(std::vector<Amplitude> amplitudes);

    int n_qubits() const { return n_qubits_; }
    size_t dim() const { return amplitudes_.size(); }
    const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
    Amplitude amplitude(size_t basis_index) const { return amplitudes_[basis_index]; }

    double norm() const;

private:
    std::vector<Amplitude> amplitudes_;
    int n_qubits_ = 0;
};

/// Simulator guard: desk-scale statevectors only.
inline constexpr int kMaxQubits = 20;

/// |0...0> on n_qubits qubits. Throws "qubit count unsupported" outside
/// [1, kMaxQubits].
QuantumState zero_state(int n_qubits);

/// Applies the rotation [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]] to one
/// qubit of the state (tensor-embedded, identity elsewhere).
QuantumState apply_ry(const QuantumState& state, int qubit, RotationAngle angle);

/// <a|b>, conjugate-linear in the first argument. Throws on dimension mismatch.
Amplitude inner_product(const QuantumState& a, const QuantumState& b);

}  // namespace qikm
