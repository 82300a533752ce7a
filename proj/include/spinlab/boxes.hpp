#pragma once

// Behavior boxes p(a, b | x, y) for two parties, two settings and two
// outcomes each, and the analyses run on them.
//
// Setting labels: x = 0 is a, x = 1 is a'; y = 0 is b, y = 1 is b'.
// Outcome index 0 is +1, index 1 is -1.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spinlab/bell.hpp"

namespace spinlab {

class BehaviorBox {
 public:
  using Entries = std::array<double, 16>;

  /// Validates: entries non-negative, each (x, y) block sums to 1 within
  /// kExactTol. Throws DomainError otherwise.
  explicit BehaviorBox(const Entries& p);

  static BehaviorBox uniform();
  /// Deterministic local strategy: Alice answers alice[x], Bob bob[y].
  static BehaviorBox deterministic(std::array<int, 2> alice, std::array<int, 2> bob);
  /// Uniform marginals with correlator E(x, y) = signs[x][y] = +1 or -1.
  static BehaviorBox from_correlator_signs(std::array<std::array<int, 2>, 2> signs);

  static constexpr std::size_t index(int x, int y, int a_idx, int b_idx) {
    return static_cast<std::size_t>(((x * 2 + y) * 2 + a_idx) * 2 + b_idx);
  }

  /// Probability by outcome value (+1 / -1).
  double p(int x, int y, int a, int b) const;
  const Entries& entries() const { return p_; }

  double correlator(int x, int y) const;
  double alice_plus(int x, int y) const;
  double bob_plus(int x, int y) const;

  friend bool operator==(const BehaviorBox&, const BehaviorBox&) = default;

 private:
  Entries p_;
};

/// Box of a Bell state with Alice measuring along alice[x] and Bob along bob[y].
BehaviorBox quantum_box(BellKind kind, const std::array<Vec3, 2>& alice,
                        const std::array<Vec3, 2>& bob);

struct NoSignallingReport {
  bool no_signalling = false;
  double max_deviation = 0.0;
  std::vector<std::string> violations;
};

NoSignallingReport no_signalling_check(const BehaviorBox& box);

struct ChshResult {
  double value = 0.0;
  std::array<std::array<double, 2>, 2> correlators{};
  /// Setting pair whose correlator enters with the minus sign.
  int negative_x = 1;
  int negative_y = 1;
};

/// max over the four single-minus placements of |+-E00 +- E01 +- E10 +- E11|.
ChshResult chsh_value(const BehaviorBox& box);
ChshResult chsh_from_correlators(const std::array<std::array<double, 2>, 2>& e);

struct LocalStrategy {
  std::array<int, 2> alice{1, 1};
  std::array<int, 2> bob{1, 1};
};

struct LhvResult {
  double value = 0.0;
  LocalStrategy witness;
  int maximizing_count = 0;
  int strategies_checked = 0;
};

/// Exhaustive search over the 16 local deterministic strategies.
LhvResult lhv_max_chsh();

/// Equal outcomes for (a,b), (a,b'), (a',b); opposite for (a',b').
BehaviorBox pr_box();

enum class ConservationStatus { consistent, inconsistent, not_applicable };

struct ConservationVerdict {
  ConservationStatus status = ConservationStatus::not_applicable;
  std::vector<std::string> trace;
};

std::string_view to_string(ConservationStatus status);

/// Treats each +-1 correlator as "the two measurement directions coincide"
/// (+1) or "are antipodal" (-1) and reports whether the four relations can
/// hold together. Boxes with any correlator other than +-1 are not
/// applicable.
ConservationVerdict conservation_filter(const BehaviorBox& box);

/// All 16 boxes of the correlator-sign family.
std::vector<BehaviorBox> correlator_sign_family();

/// True if `b` is obtained from `a` by relabelling outcomes per party and
/// setting, swapping settings per party, or exchanging the parties.
bool is_relabeling_of(const BehaviorBox& a, const BehaviorBox& b);

/// Best CHSH over a grid with Alice at {0, alpha} and Bob at
/// {beta, alpha + beta} in one plane, alpha and beta = k pi / n, k < n.
struct ChshScanResult {
  double max_value = 0.0;
  double best_alpha = 0.0;
  double best_beta = 0.0;
  std::uint64_t points = 0;
};

ChshScanResult tsirelson_scan(BellKind kind, Plane plane, int n);

}  // namespace spinlab
