#include "spinlab/spinops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace spinlab {

namespace {

constexpr double deg(double d) { return d * std::numbers::pi / 180.0; }

std::array<std::size_t, 2> moving_indices(SpinBasis fixed) {
  switch (fixed) {
    case SpinBasis::up:
      return {1, 2};
    case SpinBasis::zero:
      return {0, 2};
    case SpinBasis::down:
      return {0, 1};
  }
  return {0, 1};
}

/// 2x2 block of m on rows/cols (i, j).
ComplexMatrix block(const ComplexMatrix& m, std::size_t i, std::size_t j) {
  return ComplexMatrix(2, {m(i, i), m(i, j), m(j, i), m(j, j)});
}

}  // namespace

ComplexMatrix embed_subspace_rotation(const SubspaceRotation& step) {
  const Vec3 axis = step.generator == Generator::sigma_x ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const ComplexMatrix g = su2_exp(axis, step.theta);
  const auto idx = moving_indices(step.fixed);
  ComplexMatrix e = ComplexMatrix::identity(3);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) e(idx[r], idx[c]) = g(r, c);
  return e;
}

ComplexMatrix sequential_unitary(std::span<const SubspaceRotation> steps) {
  ComplexMatrix u = ComplexMatrix::identity(3);
  for (const SubspaceRotation& s : steps) u = u * embed_subspace_rotation(s);
  return u;
}

const ComplexMatrix& spin1_lz() {
  static const ComplexMatrix lz = ComplexMatrix::diagonal({1.0, 0.0, -1.0});
  return lz;
}

std::array<SubspaceRotation, 3> lx_rotation_steps() {
  return {{{Generator::sigma_x, deg(90.0), SpinBasis::down},
           {Generator::sigma_x, deg(45.0), SpinBasis::up},
           {Generator::sigma_x, deg(-45.0), SpinBasis::zero}}};
}

std::array<SubspaceRotation, 3> ly_rotation_steps() {
  return {{{Generator::sigma_x, deg(-90.0), SpinBasis::down},
           {Generator::sigma_x, deg(45.0), SpinBasis::up},
           {Generator::sigma_y, deg(45.0), SpinBasis::zero}}};
}

ComplexMatrix literal_lx_sequence() {
  const auto steps = lx_rotation_steps();
  return conjugate(sequential_unitary(steps), spin1_lz());
}

ComplexMatrix literal_ly_sequence() {
  const auto steps = ly_rotation_steps();
  return conjugate(sequential_unitary(steps), spin1_lz());
}

const ComplexMatrix& spin1_d_sign() {
  static const ComplexMatrix d = ComplexMatrix::diagonal({1.0, 1.0, -1.0});
  return d;
}

ComplexMatrix construct_lx_from_lz() {
  const ComplexMatrix lx = conjugate(spin1_d_sign(), literal_lx_sequence());
  return 0.5 * (lx + lx.adjoint());
}

ComplexMatrix construct_ly_from_lz() {
  const ComplexMatrix ly = conjugate(spin1_d_sign(), literal_ly_sequence());
  return 0.5 * (ly + ly.adjoint());
}

SpinOperatorTriple constructed_spin1_triple() {
  return {construct_lx_from_lz(), construct_ly_from_lz(), spin1_lz()};
}

PauliEmbeddingReport verify_pauli_embedding(const SpinOperatorTriple& t) {
  PauliEmbeddingReport rep;
  const std::array<const ComplexMatrix*, 3> ops{&t.lx, &t.ly, &t.lz};
  const std::array<const char*, 3> names{"L_x", "L_y", "L_z"};

  rep.hermitian = true;
  for (std::size_t k = 0; k < 3; ++k) {
    if (ops[k]->dim() != 3 || !ops[k]->is_hermitian()) {
      rep.hermitian = false;
      rep.failures.push_back(std::string(names[k]) + " is not a 3x3 Hermitian matrix");
    }
  }
  if (!rep.hermitian) return rep;

  rep.spectra = true;
  const std::array<double, 3> expected{-1.0, 0.0, 1.0};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto ev = hermitian_eigenvalues(*ops[k]);
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(ev[i] - expected[i]));
    if (worst > kExactTol) {
      rep.spectra = false;
      std::ostringstream os;
      os << names[k] << " spectrum {" << ev[2] << ", " << ev[1] << ", " << ev[0]
         << "} differs from {+1, 0, -1}";
      rep.failures.push_back(os.str());
    }
  }

  rep.commutators = true;
  for (std::size_t k = 0; k < 3; ++k) {
    const ComplexMatrix& a = *ops[k];
    const ComplexMatrix& b = *ops[(k + 1) % 3];
    const ComplexMatrix& c = *ops[(k + 2) % 3];
    rep.commutator_residuals[k] = max_abs_diff(commutator(a, b), kI * c);
    if (rep.commutator_residuals[k] > kExactTol) {
      rep.commutators = false;
      const bool flipped = max_abs_diff(commutator(a, b), -kI * c) <= kExactTol;
      rep.failures.push_back("[" + std::string(names[k]) + ", " + names[(k + 1) % 3] + "] " +
                             (flipped ? "= -i " : "!= i ") + names[(k + 2) % 3]);
    }
  }

  // sqrt2 L_x and sqrt2 L_y carry sigma_x / sigma_y on both overlapping
  // blocks; L_z carries sigma_z on its corner block {|u>, |d>}.
  const double s = std::sqrt(2.0);
  const bool bx = max_abs_diff(s * block(t.lx, 0, 1), pauli_x()) <= kExactTol &&
                  max_abs_diff(s * block(t.lx, 1, 2), pauli_x()) <= kExactTol;
  const bool by = max_abs_diff(s * block(t.ly, 0, 1), pauli_y()) <= kExactTol &&
                  max_abs_diff(s * block(t.ly, 1, 2), pauli_y()) <= kExactTol;
  const bool bz = max_abs_diff(block(t.lz, 0, 2), pauli_z()) <= kExactTol;
  if (!bx) rep.failures.push_back("L_x blocks do not match sigma_x / sqrt2");
  if (!by) rep.failures.push_back("L_y blocks do not match sigma_y / sqrt2");
  if (!bz) rep.failures.push_back("L_z corner block does not match sigma_z");
  rep.pauli_blocks = bx && by && bz;
  return rep;
}

}  // namespace spinlab
