#pragma once

// Two-qubit Bell states and joint spin measurements on them.
//
// Product basis order: |uu>, |ud>, |du>, |dd> (Alice first).

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "spinlab/hilbert.hpp"
#include "spinlab/rng.hpp"

namespace spinlab {

enum class BellKind { singlet, psi_plus, phi_minus, phi_plus };

inline constexpr std::array<BellKind, 4> kAllBellKinds{BellKind::singlet, BellKind::psi_plus,
                                                       BellKind::phi_minus, BellKind::phi_plus};

enum class Plane { xy, yz, xz };

std::string_view to_string(BellKind kind);
std::string_view to_string(Plane plane);
std::optional<BellKind> parse_bell_kind(std::string_view name);
std::optional<Plane> parse_plane(std::string_view name);

/// Plane in which the triplet carries conserved spin 1; empty for the
/// singlet, which is symmetric under every rotation.
std::optional<Plane> symmetry_plane(BellKind kind);

/// Unit normal of the symmetry plane: the axis of the one-parameter SU(2)
/// subgroup leaving the triplet invariant.
std::optional<Vec3> symmetry_axis(BellKind kind);

/// Unit vector at `angle` inside `plane`, measured from the first-named
/// reference axis below toward the second: xy from x toward y, yz from z
/// toward y, xz from z toward x.
Vec3 in_plane_direction(Plane plane, double angle);

StateVector bell_state(BellKind kind);

/// |state><state|.
ComplexMatrix bell_density(BellKind kind);

/// (I + cx sx(x)sx + cy sy(x)sy + cz sz(x)sz) / 4 with the kind's signs.
ComplexMatrix bell_density_pauli_form(BellKind kind);
std::array<int, 3> pauli_signature(BellKind kind);

/// a . sigma; throws DomainError unless `direction` is a unit vector.
ComplexMatrix measurement_operator(Vec3 direction);

/// (I + outcome a.sigma) / 2 for outcome = +1 or -1.
ComplexMatrix outcome_projector(Vec3 direction, int outcome);

struct JointProbabilities {
  double p_pp = 0.0;
  double p_pm = 0.0;
  double p_mp = 0.0;
  double p_mm = 0.0;

  double at(int alice, int bob) const;
  double total() const { return p_pp + p_pm + p_mp + p_mm; }
  double correlator() const { return p_pp + p_mm - p_pm - p_mp; }
  double alice_plus() const { return p_pp + p_pm; }
  double bob_plus() const { return p_pp + p_mp; }
  std::array<double, 4> as_array() const { return {p_pp, p_pm, p_mp, p_mm}; }
};

/// Tr(rho (P_a (x) P_b)) over the four outcome pairs.
JointProbabilities joint_probabilities(BellKind kind, Vec3 a_dir, Vec3 b_dir);

/// Like-outcome probability (1/2)cos^2(theta/2) each, unlike (1/2)sin^2(theta/2)
/// each, for a triplet measured in its symmetry plane; swapped for the
/// singlet. Only valid where those conditions hold.
JointProbabilities closed_form_joint(BellKind kind, double theta);

/// E[Bob | Alice = alice_outcome]. Throws UndefinedConditionalError when the
/// conditioning outcome has zero probability.
double conditional_average(BellKind kind, Vec3 a_dir, Vec3 b_dir, int alice_outcome);

struct InvarianceReport {
  bool invariant = false;
  /// Whether the rotation belongs to the kind's symmetry group.
  bool symmetry_rotation = false;
  double max_deviation = 0.0;
};

/// Compares (U (x) U) rho (U (x) U)^dagger with rho for U = exp(i theta n.sigma).
InvarianceReport invariance_check(BellKind kind, Vec3 axis, double theta);

struct JointSample {
  std::array<std::uint64_t, 4> counts{};  // ++, +-, -+, --
  std::uint64_t n = 0;
  std::uint64_t seed = 0;

  double frequency(std::size_t i) const {
    return static_cast<double>(counts[i]) / static_cast<double>(n);
  }
  /// Empirical E[Bob | Alice = +1].
  double conditional_bob_given_alice_plus() const;
};

/// One categorical draw over the four outcomes per trial.
JointSample sample_joint(BellKind kind, Vec3 a_dir, Vec3 b_dir, std::uint64_t n, std::uint64_t seed);

inline constexpr std::uint64_t kBellStream = 0x4245;  // "BE"

}  // namespace spinlab
