#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "spinlab/spinops.hpp"

using namespace spinlab;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

// The printed spin-1 targets, entered by hand.
ComplexMatrix target_lx() { return ComplexMatrix(3, {0, kH, 0, kH, 0, kH, 0, kH, 0}); }

ComplexMatrix target_ly() {
  const Complex a{0, -kH}, b{0, kH};
  return ComplexMatrix(3, {0, a, 0, b, 0, a, 0, b, 0});
}

// exp(i theta g) on the two basis vectors other than `fixed`, built with
// Eigen's matrix exponential.
oracle::Mat oracle_step(const oracle::Mat& g, double theta, int fixed) {
  const oracle::Mat u2 = (oracle::Cplx(0, theta) * g).exp();
  oracle::Mat u = oracle::id(3);
  int idx[2], k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != fixed) idx[k++] = i;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) u(idx[r], idx[c]) = u2(r, c);
  return u;
}

}  // namespace

TEST(Spin1, LzIsDiagonal) {
  EXPECT_LE(max_abs_diff(spin1_lz(), ComplexMatrix::diagonal({1.0, 0.0, -1.0})), 0.0);
}

TEST(Spin1, ConstructedLxMatchesPrintedMatrix) {
  const ComplexMatrix lx = construct_lx_from_lz();
  EXPECT_NEAR(lx(0, 1).real(), kH, kExactTol);
  EXPECT_LE(max_abs_diff(lx, target_lx()), kExactTol);
  const auto ev = hermitian_eigenvalues(lx);
  EXPECT_NEAR(ev[0], -1.0, kExactTol);
  EXPECT_NEAR(ev[1], 0.0, kExactTol);
  EXPECT_NEAR(ev[2], 1.0, kExactTol);
}

TEST(Spin1, ConstructedLyMatchesPrintedMatrix) {
  const ComplexMatrix ly = construct_ly_from_lz();
  EXPECT_NEAR(std::abs(ly(1, 0) - Complex(0, kH)), 0.0, kExactTol);
  EXPECT_LE(max_abs_diff(ly, target_ly()), kExactTol);
  EXPECT_LE(max_abs_diff(commutator(construct_lx_from_lz(), ly), kI * spin1_lz()), kExactTol);
}

TEST(Spin1, LiteralSequencesMatchExponentialOracle) {
  for (const auto& steps : {lx_rotation_steps(), ly_rotation_steps()}) {
    // Step k acts about the axis moved by steps 1..k-1: conjugating it by the
    // running product and multiplying on the left gives U_k = U_{k-1} E_k.
    oracle::Mat u = oracle::id(3);
    for (const auto& s : steps) {
      const oracle::Mat g = s.generator == Generator::sigma_x ? oracle::sx() : oracle::sy();
      const oracle::Mat e = oracle_step(g, s.theta, static_cast<int>(s.fixed));
      u = (u * e * u.adjoint()) * u;
    }
    const oracle::Mat lit = u * oracle::to_eigen(spin1_lz()) * u.adjoint();
    const oracle::Mat mine = oracle::to_eigen(steps[2].generator == Generator::sigma_y ? literal_ly_sequence()
                                                                                      : literal_lx_sequence());
    EXPECT_LE(oracle::max_abs(lit - mine), kExactTol);
  }
}

TEST(Spin1, LiteralSequencesDifferFromTargetsByDSign) {
  const oracle::Mat lx = oracle::to_eigen(literal_lx_sequence());
  const oracle::Mat ly = oracle::to_eigen(literal_ly_sequence());
  EXPECT_GT(oracle::max_abs(lx - oracle::to_eigen(target_lx())), 0.5);
  EXPECT_GT(oracle::max_abs(ly - oracle::to_eigen(target_ly())), 0.5);

  oracle::Mat d = oracle::id(3);
  d(2, 2) = -1.0;
  EXPECT_LE(oracle::max_abs(d * lx * d - oracle::to_eigen(target_lx())), kExactTol);
  EXPECT_LE(oracle::max_abs(d * ly * d - oracle::to_eigen(target_ly())), kExactTol);
}

TEST(Spin1, EmbeddedStepIsUnitary) {
  for (const auto& s : lx_rotation_steps()) {
    const ComplexMatrix u = embed_subspace_rotation(s);
    EXPECT_LE(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(3)), kExactTol);
  }
}

TEST(Spin1, ConstructedTripleHasFullAlgebra) {
  const SpinOperatorTriple t = constructed_spin1_triple();
  EXPECT_LE(max_abs_diff(commutator(t.lx, t.ly), kI * t.lz), kExactTol);
  EXPECT_LE(max_abs_diff(commutator(t.ly, t.lz), kI * t.lx), kExactTol);
  EXPECT_LE(max_abs_diff(commutator(t.lz, t.lx), kI * t.ly), kExactTol);
  for (const ComplexMatrix* m : {&t.lx, &t.ly}) {
    const auto ev = hermitian_eigenvalues(*m);
    EXPECT_NEAR(ev[0], -1.0, kExactTol);
    EXPECT_NEAR(ev[1], 0.0, kExactTol);
    EXPECT_NEAR(ev[2], 1.0, kExactTol);
  }
}

TEST(VerifyPauliEmbedding, CanonicalTriplePasses) {
  const PauliEmbeddingReport r = verify_pauli_embedding(constructed_spin1_triple());
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.failures.empty());
  for (double res : r.commutator_residuals) EXPECT_LE(res, kExactTol);
}

TEST(VerifyPauliEmbedding, SwappedTripleReportsSignFlip) {
  SpinOperatorTriple t = constructed_spin1_triple();
  std::swap(t.lx, t.ly);
  const PauliEmbeddingReport r = verify_pauli_embedding(t);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.commutators);
  EXPECT_TRUE(r.spectra);
  bool found = false;
  for (const auto& f : r.failures) found = found || f.find("= -i") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(VerifyPauliEmbedding, ScaledTripleFailsSpectrum) {
  SpinOperatorTriple t = constructed_spin1_triple();
  t.lx = 2.0 * t.lx;
  t.ly = 2.0 * t.ly;
  t.lz = 2.0 * t.lz;
  const PauliEmbeddingReport r = verify_pauli_embedding(t);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.spectra);
  EXPECT_TRUE(r.hermitian);
}
