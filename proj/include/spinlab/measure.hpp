#pragma once

// Stern-Gerlach measurement of a spin-1/2 particle prepared along one
// direction and measured along another. Outcomes are +1 / -1 (hbar/2 = 1).

#include <cstdint>
#include <utility>

#include "spinlab/hilbert.hpp"
#include "spinlab/rng.hpp"

namespace spinlab {

class SGSetup {
 public:
  /// Both directions must be unit vectors. The angle is always derived.
  SGSetup(Vec3 prep_direction, Vec3 meas_direction);

  /// Preparation along z, measurement at `theta` from z in the xz-plane.
  static SGSetup in_xz_plane(double theta);

  Vec3 prep_direction() const { return prep_; }
  Vec3 meas_direction() const { return meas_; }
  double cos_theta() const { return cos_theta_; }
  double theta() const;

 private:
  Vec3 prep_;
  Vec3 meas_;
  double cos_theta_;
};

struct OutcomeProbabilities {
  double p_plus = 0.0;
  double p_minus = 0.0;
};

/// p_plus = cos^2(theta/2), p_minus = 1 - p_plus.
OutcomeProbabilities projection_probabilities(const SGSetup& setup);

/// (+1) p_plus + (-1) p_minus; equals cos(theta).
double expected_outcome(const SGSetup& setup);

/// The classical constructive prediction S . b for a unit moment S.
double classical_projection(const SGSetup& setup);

struct OutcomeSample {
  std::uint64_t n_plus = 0;
  std::uint64_t n_minus = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;

  double fraction_plus() const { return static_cast<double>(n_plus) / static_cast<double>(n); }
  double mean() const {
    return (static_cast<double>(n_plus) - static_cast<double>(n_minus)) / static_cast<double>(n);
  }
};

/// Trial i draws uniform(seed, i) and reports +1 iff it falls below p_plus.
/// Throws DomainError if n == 0.
OutcomeSample sample_outcomes(const SGSetup& setup, std::uint64_t n, std::uint64_t seed);

/// Outcome (+1 or -1) of a single trial; consistent with sample_outcomes.
int sample_single(const SGSetup& setup, std::uint64_t seed, std::uint64_t trial);

/// Half-width k * sqrt(p (1 - p) / n) of the binomial band for a fraction.
double binomial_band(double p, std::uint64_t n, double k = 3.0);

inline constexpr std::uint64_t kMeasureStream = 0x5347;  // "SG"

}  // namespace spinlab
