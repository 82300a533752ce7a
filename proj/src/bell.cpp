#include "spinlab/bell.hpp"

#include <cmath>
#include <numbers>

#include "spinlab/errors.hpp"
#include "spinlab/kernels.hpp"

namespace spinlab {

std::string_view to_string(BellKind kind) {
  switch (kind) {
    case BellKind::singlet:
      return "singlet";
    case BellKind::psi_plus:
      return "psi+";
    case BellKind::phi_minus:
      return "phi-";
    case BellKind::phi_plus:
      return "phi+";
  }
  return "?";
}

std::string_view to_string(Plane plane) {
  switch (plane) {
    case Plane::xy:
      return "xy";
    case Plane::yz:
      return "yz";
    case Plane::xz:
      return "xz";
  }
  return "?";
}

std::optional<BellKind> parse_bell_kind(std::string_view name) {
  if (name == "singlet" || name == "psi-") return BellKind::singlet;
  if (name == "psi+") return BellKind::psi_plus;
  if (name == "phi-") return BellKind::phi_minus;
  if (name == "phi+") return BellKind::phi_plus;
  return std::nullopt;
}

std::optional<Plane> parse_plane(std::string_view name) {
  if (name == "xy" || name == "yx") return Plane::xy;
  if (name == "yz" || name == "zy") return Plane::yz;
  if (name == "xz" || name == "zx") return Plane::xz;
  return std::nullopt;
}

std::optional<Plane> symmetry_plane(BellKind kind) {
  switch (kind) {
    case BellKind::singlet:
      return std::nullopt;
    case BellKind::psi_plus:
      return Plane::xy;
    case BellKind::phi_minus:
      return Plane::yz;
    case BellKind::phi_plus:
      return Plane::xz;
  }
  return std::nullopt;
}

std::optional<Vec3> symmetry_axis(BellKind kind) {
  switch (kind) {
    case BellKind::singlet:
      return std::nullopt;
    case BellKind::psi_plus:
      return Vec3{0, 0, 1};
    case BellKind::phi_minus:
      return Vec3{1, 0, 0};
    case BellKind::phi_plus:
      return Vec3{0, 1, 0};
  }
  return std::nullopt;
}

Vec3 in_plane_direction(Plane plane, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  switch (plane) {
    case Plane::xy:
      return {c, s, 0.0};
    case Plane::yz:
      return {0.0, s, c};
    case Plane::xz:
      return {s, 0.0, c};
  }
  return {};
}

StateVector bell_state(BellKind kind) {
  const double h = 1.0 / std::numbers::sqrt2;
  switch (kind) {
    case BellKind::singlet:
      return {0.0, h, -h, 0.0};
    case BellKind::psi_plus:
      return {0.0, h, h, 0.0};
    case BellKind::phi_minus:
      return {h, 0.0, 0.0, -h};
    case BellKind::phi_plus:
      return {h, 0.0, 0.0, h};
  }
  return StateVector(4);
}

ComplexMatrix bell_density(BellKind kind) { return bell_state(kind).projector(); }

std::array<int, 3> pauli_signature(BellKind kind) {
  switch (kind) {
    case BellKind::singlet:
      return {-1, -1, -1};
    case BellKind::psi_plus:
      return {+1, +1, -1};
    case BellKind::phi_minus:
      return {-1, +1, +1};
    case BellKind::phi_plus:
      return {+1, -1, +1};
  }
  return {};
}

ComplexMatrix bell_density_pauli_form(BellKind kind) {
  const auto [cx, cy, cz] = pauli_signature(kind);
  ComplexMatrix m = ComplexMatrix::identity(4);
  m += static_cast<double>(cx) * tensor(pauli_x(), pauli_x());
  m += static_cast<double>(cy) * tensor(pauli_y(), pauli_y());
  m += static_cast<double>(cz) * tensor(pauli_z(), pauli_z());
  return 0.25 * m;
}

ComplexMatrix measurement_operator(Vec3 direction) {
  require_unit(direction, "measurement direction");
  return sigma_along(direction);
}

ComplexMatrix outcome_projector(Vec3 direction, int outcome) {
  if (outcome != 1 && outcome != -1) throw DomainError("outcome must be +1 or -1");
  return 0.5 * (pauli_identity() + static_cast<double>(outcome) * measurement_operator(direction));
}

double JointProbabilities::at(int alice, int bob) const {
  if (alice == 1) return bob == 1 ? p_pp : p_pm;
  return bob == 1 ? p_mp : p_mm;
}

JointProbabilities joint_probabilities(BellKind kind, Vec3 a_dir, Vec3 b_dir) {
  const ComplexMatrix rho = bell_density(kind);
  const std::array<ComplexMatrix, 2> pa{outcome_projector(a_dir, +1), outcome_projector(a_dir, -1)};
  const std::array<ComplexMatrix, 2> pb{outcome_projector(b_dir, +1), outcome_projector(b_dir, -1)};
  auto p = [&](int i, int j) { return (rho * tensor(pa[i], pb[j])).trace().real(); };
  return {p(0, 0), p(0, 1), p(1, 0), p(1, 1)};
}

JointProbabilities closed_form_joint(BellKind kind, double theta) {
  const double like = 0.5 * std::pow(std::cos(theta / 2.0), 2);
  const double unlike = 0.5 * std::pow(std::sin(theta / 2.0), 2);
  if (kind == BellKind::singlet) return {unlike, like, like, unlike};
  return {like, unlike, unlike, like};
}

double conditional_average(BellKind kind, Vec3 a_dir, Vec3 b_dir, int alice_outcome) {
  if (alice_outcome != 1 && alice_outcome != -1) throw DomainError("outcome must be +1 or -1");
  const JointProbabilities jp = joint_probabilities(kind, a_dir, b_dir);
  const double plus = jp.at(alice_outcome, +1);
  const double minus = jp.at(alice_outcome, -1);
  const double marginal = plus + minus;
  if (marginal <= kExactTol) {
    throw UndefinedConditionalError("Alice's conditioning outcome has zero probability");
  }
  return (plus - minus) / marginal;
}

InvarianceReport invariance_check(BellKind kind, Vec3 axis, double theta) {
  const ComplexMatrix u = su2_exp(axis, theta);
  const ComplexMatrix uu = tensor(u, u);
  const ComplexMatrix rho = bell_density(kind);
  InvarianceReport rep;
  rep.max_deviation = max_abs_diff(conjugate(uu, rho), rho);
  rep.invariant = rep.max_deviation <= kExactTol;
  if (const auto sym = symmetry_axis(kind)) {
    const bool along = std::abs(std::abs(dot(*sym, axis)) - 1.0) <= kExactTol;
    const bool trivial = std::abs(std::sin(theta)) <= kExactTol;  // U = +-I
    rep.symmetry_rotation = along || trivial;
  } else {
    rep.symmetry_rotation = true;
  }
  return rep;
}

double JointSample::conditional_bob_given_alice_plus() const {
  const auto plus = static_cast<double>(counts[0]);
  const auto minus = static_cast<double>(counts[1]);
  if (plus + minus == 0.0) throw UndefinedConditionalError("no Alice = +1 trials in sample");
  return (plus - minus) / (plus + minus);
}

JointSample sample_joint(BellKind kind, Vec3 a_dir, Vec3 b_dir, std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample_joint needs at least one trial");
  const JointProbabilities jp = joint_probabilities(kind, a_dir, b_dir);
  JointSample s;
  s.counts = kernels::omp::categorical_counts(CounterRng(seed), kBellStream, jp.as_array(), n);
  s.n = n;
  s.seed = seed;
  return s;
}

}  // namespace spinlab
