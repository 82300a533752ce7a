#pragma once

// Small fixed-dimension complex linear algebra (dimensions 2, 3 and 4).
//
// Everything here is a value type. Matrices are stored row-major in a fixed
// 16-slot buffer so no operation allocates.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace spinlab {

using Complex = std::complex<double>;

inline constexpr double kExactTol = 1e-12;  // exact-algebra checks
inline constexpr double kScanTol = 1e-9;    // iterative / scan results

inline constexpr Complex kI{0.0, 1.0};

/// Real 3-vector for directions and Bloch vectors.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(Vec3, Vec3) = default;

  constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(Vec3 v);
Vec3 normalized(Vec3 v);
double max_abs_diff(Vec3 a, Vec3 b);

/// Throws DomainError naming `what` if |v| differs from 1 by more than kExactTol.
void require_unit(Vec3 v, const char* what);

/// Real 3x3 rotation, row-major.
struct Rotation3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  Vec3 apply(Vec3 v) const;
  Rotation3 then(const Rotation3& next) const;  // next * this
};

/// Right-handed rotation by `angle` radians about unit `axis` (Rodrigues).
Rotation3 so3_rotation(Vec3 axis, double angle);

class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxDim = 4;

  explicit ComplexMatrix(std::size_t dim = 2);
  /// Row-major entries; the list length must be dim^2.
  ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ * dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  bool is_hermitian(double tol = kExactTol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex{s, 0.0}; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Largest entrywise modulus of a - b. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Column state vector of dimension 2..4.
class StateVector {
 public:
  StateVector(std::initializer_list<Complex> amplitudes);
  explicit StateVector(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  /// |v><v|
  ComplexMatrix projector() const;

  friend StateVector operator*(const ComplexMatrix& m, const StateVector& v);
  friend double max_abs_diff(const StateVector& a, const StateVector& b);

 private:
  std::size_t dim_;
  std::array<Complex, ComplexMatrix::kMaxDim> amps_{};
};

const ComplexMatrix& pauli_identity();
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

/// Real coefficients of M = m0 I + mx sx + my sy + mz sz.
struct PauliCoefficients {
  double m0 = 0.0;
  double mx = 0.0;
  double my = 0.0;
  double mz = 0.0;

  ComplexMatrix reconstruct() const;
  /// Closed-form spectrum {m0 - r, m0 + r}, r = |(mx, my, mz)|, ascending.
  std::array<double, 2> eigenvalues() const;
};

PauliCoefficients pauli_decompose(const ComplexMatrix& m);

/// a . sigma for a real 3-vector (no normalisation check).
ComplexMatrix sigma_along(Vec3 a);

/// exp(i theta n.sigma) = cos(theta) I + i sin(theta) n.sigma for unit n.
ComplexMatrix su2_exp(Vec3 axis, double theta);

/// Kronecker product of two 2x2 matrices.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// ab - ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ascending eigenvalues of a Hermitian matrix of any supported dimension.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// U m U^dagger.
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m);

}  // namespace spinlab
