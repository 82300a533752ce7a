#pragma once

// Spin-1 measurement operators built from L_z by SU(2) rotations acting on
// two-dimensional subspaces of the three-dimensional space.
//
// Basis order is (|u>, |0>, |d>), the L_z eigenbasis with eigenvalues
// (+1, 0, -1). Units hbar = 1.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "spinlab/hilbert.hpp"

namespace spinlab {

enum class SpinBasis { up = 0, zero = 1, down = 2 };
enum class Generator { sigma_x, sigma_y };

/// exp(i theta sigma) applied to the two basis vectors other than `fixed`,
/// identity on `fixed`.
struct SubspaceRotation {
  Generator generator = Generator::sigma_x;
  double theta = 0.0;  // Hilbert-space angle, radians
  SpinBasis fixed = SpinBasis::down;
};

ComplexMatrix embed_subspace_rotation(const SubspaceRotation& step);

/// Each step acts about the axis as transformed by the steps before it,
/// i.e. E_k' = (E_1...E_{k-1}) E_k (E_1...E_{k-1})^dagger, so the product
/// of the transformed steps is U = E_1 E_2 ... E_n.
ComplexMatrix sequential_unitary(std::span<const SubspaceRotation> steps);

const ComplexMatrix& spin1_lz();

/// The step lists for L_x and L_y: 90, 45, -45 degrees (sigma_x throughout)
/// and -90, 45 (sigma_x) then 45 (sigma_y), about |d>, |u>, |0> in turn.
std::array<SubspaceRotation, 3> lx_rotation_steps();
std::array<SubspaceRotation, 3> ly_rotation_steps();

/// U L_z U^dagger for each step list, without any phase adjustment. Both
/// equal the targets below up to the sign of the |d> basis vector.
ComplexMatrix literal_lx_sequence();
ComplexMatrix literal_ly_sequence();

/// Basis sign flip |d> -> -|d> applied after the literal sequences.
const ComplexMatrix& spin1_d_sign();

/// (1/sqrt2) [[0,1,0],[1,0,1],[0,1,0]].
ComplexMatrix construct_lx_from_lz();

/// (1/sqrt2) [[0,-i,0],[i,0,-i],[0,i,0]].
ComplexMatrix construct_ly_from_lz();

struct SpinOperatorTriple {
  ComplexMatrix lx{3};
  ComplexMatrix ly{3};
  ComplexMatrix lz{3};
};

SpinOperatorTriple constructed_spin1_triple();

struct PauliEmbeddingReport {
  bool hermitian = false;
  bool spectra = false;
  bool commutators = false;
  bool pauli_blocks = false;
  /// max |[L_x,L_y] - i L_z|, then the two cyclic permutations.
  std::array<double, 3> commutator_residuals{};
  std::vector<std::string> failures;

  bool passed() const { return hermitian && spectra && commutators && pauli_blocks; }
};

/// Never throws on a bad triple; violations are listed in the report.
PauliEmbeddingReport verify_pauli_embedding(const SpinOperatorTriple& triple);

}  // namespace spinlab
