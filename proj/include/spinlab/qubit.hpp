#pragma once

// Qubit (Bloch ball) and classical-bit (1-simplex) state spaces.

#include <cstdint>
#include <vector>

#include "spinlab/hilbert.hpp"

namespace spinlab {

enum class Axis { x, y, z };

Vec3 axis_vector(Axis axis);

/// Validated 2x2 density matrix with its Bloch-vector view.
///
/// rho = (I + bx sx + by sy + bz sz) / 2. Construction checks unit trace,
/// Hermiticity and positivity; later operations trust the invariant.
class QubitState {
 public:
  static QubitState from_density(const ComplexMatrix& rho);
  static QubitState from_bloch(Vec3 bloch);
  static QubitState spin_up() { return from_bloch({0.0, 0.0, 1.0}); }
  static QubitState spin_down() { return from_bloch({0.0, 0.0, -1.0}); }
  static QubitState maximally_mixed() { return from_bloch({0.0, 0.0, 0.0}); }

  const ComplexMatrix& rho() const { return rho_; }
  Vec3 bloch() const { return bloch_; }
  double bloch_length() const { return norm(bloch_); }

  /// Rank-1 projector, i.e. Bloch vector on the unit sphere.
  bool is_pure(double tol = kExactTol) const;
  bool is_maximally_mixed(double tol = kExactTol) const;

 private:
  QubitState(ComplexMatrix rho, Vec3 bloch) : rho_(rho), bloch_(bloch) {}

  ComplexMatrix rho_;
  Vec3 bloch_;
};

/// density -> Bloch -> density.
QubitState bloch_roundtrip(const QubitState& state);

/// Conjugation rho -> U rho U^dagger with U = exp(i theta sigma_axis).
///
/// Convention: the Bloch vector turns by -2 theta about `axis` (right-hand
/// rule). Real-space angle = 2 x Hilbert-space angle.
QubitState su2_rotate(const QubitState& state, Axis axis, double theta);
QubitState su2_rotate(const QubitState& state, Vec3 axis, double theta);

/// The SO(3) image of exp(i theta n.sigma) acting on Bloch vectors.
Rotation3 bloch_rotation(Vec3 axis, double theta);

/// States visited by `steps` equal increments of a rotation; steps + 1 states.
std::vector<QubitState> rotation_path(const QubitState& start, Axis axis, double total_theta,
                                      int steps);

/// Probability-space dimension 2^s - 1 of a generalized bit indexed by s
/// (s = 1 classical bit, s = 2 qubit). Throws DomainError for s < 1 or s > 63.
std::uint64_t gbit_dimension(int s);

/// One ball in two boxes: probability vector (p1, 1 - p1).
class ClassicalBitState {
 public:
  explicit ClassicalBitState(double p1);

  double p1() const { return p1_; }
  double p2() const { return 1.0 - p1_; }
  bool is_pure() const { return p1_ == 0.0 || p1_ == 1.0; }

 private:
  double p1_;
};

/// The straight path between two distinct pure classical states, endpoints
/// included, with `steps` evenly spaced interior points.
std::vector<ClassicalBitState> classical_pure_path(ClassicalBitState from, ClassicalBitState to,
                                                   int steps);

}  // namespace spinlab
