#include "spinlab/qubit.hpp"

#include <cmath>
#include <string>

#include "spinlab/errors.hpp"

namespace spinlab {

Vec3 axis_vector(Axis axis) {
  switch (axis) {
    case Axis::x:
      return {1.0, 0.0, 0.0};
    case Axis::y:
      return {0.0, 1.0, 0.0};
    case Axis::z:
      return {0.0, 0.0, 1.0};
  }
  return {};
}

QubitState QubitState::from_density(const ComplexMatrix& rho) {
  if (rho.dim() != 2) throw InvalidStateError("qubit density matrix must be 2x2");
  if (!rho.is_hermitian()) throw InvalidStateError("density matrix is not Hermitian");
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > kExactTol) {
    throw InvalidStateError("density matrix trace is " + std::to_string(tr.real()) + ", not 1");
  }
  const PauliCoefficients c = pauli_decompose(rho);
  if (c.eigenvalues()[0] < -kExactTol) {
    throw InvalidStateError("density matrix has a negative eigenvalue");
  }
  return QubitState(rho, {2.0 * c.mx, 2.0 * c.my, 2.0 * c.mz});
}

QubitState QubitState::from_bloch(Vec3 bloch) {
  if (!std::isfinite(bloch.x) || !std::isfinite(bloch.y) || !std::isfinite(bloch.z)) {
    throw InvalidStateError("Bloch vector has non-finite components");
  }
  if (norm(bloch) > 1.0 + kExactTol) throw InvalidStateError("Bloch vector lies outside the unit ball");
  const PauliCoefficients c{0.5, 0.5 * bloch.x, 0.5 * bloch.y, 0.5 * bloch.z};
  return QubitState(c.reconstruct(), bloch);
}

bool QubitState::is_pure(double tol) const { return std::abs(bloch_length() - 1.0) <= tol; }

bool QubitState::is_maximally_mixed(double tol) const { return bloch_length() <= tol; }

QubitState bloch_roundtrip(const QubitState& state) {
  return QubitState::from_density(QubitState::from_bloch(state.bloch()).rho());
}

QubitState su2_rotate(const QubitState& state, Vec3 axis, double theta) {
  if (!std::isfinite(theta)) throw DomainError("rotation angle must be finite");
  const ComplexMatrix u = su2_exp(axis, theta);
  ComplexMatrix rho = conjugate(u, state.rho());
  // Re-symmetrise so round-off never trips the Hermiticity check.
  rho = 0.5 * (rho + rho.adjoint());
  return QubitState::from_density(rho);
}

QubitState su2_rotate(const QubitState& state, Axis axis, double theta) {
  return su2_rotate(state, axis_vector(axis), theta);
}

Rotation3 bloch_rotation(Vec3 axis, double theta) { return so3_rotation(axis, -2.0 * theta); }

std::vector<QubitState> rotation_path(const QubitState& start, Axis axis, double total_theta,
                                      int steps) {
  if (steps < 1) throw DomainError("rotation_path needs at least one step");
  std::vector<QubitState> path;
  path.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    path.push_back(su2_rotate(start, axis, total_theta * k / steps));
  }
  return path;
}

std::uint64_t gbit_dimension(int s) {
  if (s < 1) throw DomainError("gbit index s must be at least 1");
  if (s > 63) throw DomainError("gbit index s too large for a 64-bit result");
  return (std::uint64_t{1} << s) - 1;
}

ClassicalBitState::ClassicalBitState(double p1) : p1_(p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw DomainError("p1 must lie in [0, 1]");
}

std::vector<ClassicalBitState> classical_pure_path(ClassicalBitState from, ClassicalBitState to,
                                                   int steps) {
  if (!from.is_pure() || !to.is_pure()) throw DomainError("path endpoints must be pure states");
  if (from.p1() == to.p1()) throw DomainError("path endpoints must differ");
  if (steps < 0) throw DomainError("interior step count must be non-negative");
  std::vector<ClassicalBitState> path;
  path.reserve(static_cast<std::size_t>(steps) + 2);
  const int intervals = steps + 1;
  for (int k = 0; k <= intervals; ++k) {
    const double t = static_cast<double>(k) / intervals;
    path.emplace_back((1.0 - t) * from.p1() + t * to.p1());
  }
  return path;
}

}  // namespace spinlab
