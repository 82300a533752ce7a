#include "spinlab/hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "spinlab/errors.hpp"

namespace spinlab {

namespace {

void require_supported(std::size_t dim) {
  if (dim < 2 || dim > ComplexMatrix::kMaxDim) {
    throw DimensionError("unsupported matrix dimension " + std::to_string(dim));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

Vec3 normalized(Vec3 v) {
  const double n = norm(v);
  if (n == 0.0) throw DomainError("cannot normalise the zero vector");
  return (1.0 / n) * v;
}

double max_abs_diff(Vec3 a, Vec3 b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

void require_unit(Vec3 v, const char* what) {
  if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z) ||
      std::abs(norm(v) - 1.0) > kExactTol) {
    throw DomainError(std::string(what) + " must be a unit vector");
  }
}

Vec3 Rotation3::apply(Vec3 v) const {
  return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
          m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

Rotation3 Rotation3::then(const Rotation3& next) const {
  Rotation3 out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += next.m[r * 3 + k] * m[k * 3 + c];
      out.m[r * 3 + c] = s;
    }
  }
  return out;
}

Rotation3 so3_rotation(Vec3 axis, double angle) {
  const Vec3 n = normalized(axis);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double t = 1.0 - c;
  Rotation3 r;
  r.m = {t * n.x * n.x + c,       t * n.x * n.y - s * n.z, t * n.x * n.z + s * n.y,
         t * n.x * n.y + s * n.z, t * n.y * n.y + c,       t * n.y * n.z - s * n.x,
         t * n.x * n.z - s * n.y, t * n.y * n.z + s * n.x, t * n.z * n.z + c};
  return r;
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { require_supported(dim); }

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries)
    : ComplexMatrix(dim) {
  if (entries.size() != dim * dim) {
    throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(entries.size()));
  }
  std::copy(entries.begin(), entries.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  ComplexMatrix m(diag.size());
  std::size_t i = 0;
  for (const Complex& d : diag) {
    m(i, i) = d;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::is_hermitian(double tol) const { return max_abs_diff(*this, adjoint()) <= tol; }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t i = 0; i < size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (std::size_t i = 0; i < size(); ++i) data_[i] *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

StateVector::StateVector(std::size_t dim) : dim_(dim) { require_supported(dim); }

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(amplitudes.size()) {
  std::copy(amplitudes.begin(), amplitudes.end(), amps_.begin());
}

double StateVector::norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) s += std::norm(amps_[i]);
  return std::sqrt(s);
}

ComplexMatrix StateVector::projector() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(r, c) = amps_[r] * std::conj(amps_[c]);
  return out;
}

StateVector operator*(const ComplexMatrix& m, const StateVector& v) {
  if (m.dim() != v.dim()) throw DimensionError("matrix-vector dimension mismatch");
  StateVector out(v.dim());
  for (std::size_t r = 0; r < v.dim(); ++r) {
    Complex s{};
    for (std::size_t k = 0; k < v.dim(); ++k) s += m(r, k) * v[k];
    out[r] = s;
  }
  return out;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("state vector dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

const ComplexMatrix& pauli_identity() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m(2, {0.0, 1.0, 1.0, 0.0});
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m(2, {0.0, -kI, kI, 0.0});
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m(2, {1.0, 0.0, 0.0, -1.0});
  return m;
}

ComplexMatrix PauliCoefficients::reconstruct() const {
  return m0 * pauli_identity() + mx * pauli_x() + my * pauli_y() + mz * pauli_z();
}

std::array<double, 2> PauliCoefficients::eigenvalues() const {
  const double r = std::sqrt(mx * mx + my * my + mz * mz);
  return {m0 - r, m0 + r};
}

PauliCoefficients pauli_decompose(const ComplexMatrix& m) {
  if (m.dim() != 2) throw DimensionError("pauli_decompose needs a 2x2 matrix");
  if (!m.is_hermitian()) throw DomainError("pauli_decompose needs a Hermitian matrix");
  // Tr(sigma_j sigma_k) = 2 delta_jk; Hermiticity makes each trace real.
  return {0.5 * (m(0, 0) + m(1, 1)).real(), m(0, 1).real(), -m(0, 1).imag(),
          0.5 * (m(0, 0) - m(1, 1)).real()};
}

ComplexMatrix sigma_along(Vec3 a) { return a.x * pauli_x() + a.y * pauli_y() + a.z * pauli_z(); }

ComplexMatrix su2_exp(Vec3 axis, double theta) {
  require_unit(axis, "SU(2) axis");
  return std::cos(theta) * pauli_identity() + (kI * std::sin(theta)) * sigma_along(axis);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) throw DimensionError("tensor supports 2x2 factors only");
  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.is_hermitian()) throw DomainError("hermitian_eigenvalues needs a Hermitian matrix");
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd e(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      e(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e, Eigen::EigenvaluesOnly);
  const auto& vals = solver.eigenvalues();
  return {vals.data(), vals.data() + vals.size()};
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) { return u * m * u.adjoint(); }

}  // namespace spinlab
