#include "spinlab/measure.hpp"

#include <algorithm>
#include <cmath>

#include "spinlab/errors.hpp"
#include "spinlab/kernels.hpp"

namespace spinlab {

SGSetup::SGSetup(Vec3 prep_direction, Vec3 meas_direction)
    : prep_(prep_direction), meas_(meas_direction) {
  require_unit(prep_, "preparation direction");
  require_unit(meas_, "measurement direction");
  cos_theta_ = std::clamp(dot(prep_, meas_), -1.0, 1.0);
}

SGSetup SGSetup::in_xz_plane(double theta) {
  return SGSetup({0.0, 0.0, 1.0}, {std::sin(theta), 0.0, std::cos(theta)});
}

double SGSetup::theta() const { return std::acos(cos_theta_); }

OutcomeProbabilities projection_probabilities(const SGSetup& setup) {
  const double p_plus = 0.5 * (1.0 + setup.cos_theta());
  return {p_plus, 1.0 - p_plus};
}

double expected_outcome(const SGSetup& setup) {
  const auto [p_plus, p_minus] = projection_probabilities(setup);
  return p_plus - p_minus;
}

double classical_projection(const SGSetup& setup) {
  return dot(setup.prep_direction(), setup.meas_direction());
}

OutcomeSample sample_outcomes(const SGSetup& setup, std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample_outcomes needs at least one trial");
  const double p_plus = projection_probabilities(setup).p_plus;
  const std::uint64_t plus = kernels::omp::count_below(CounterRng(seed), kMeasureStream, p_plus, n);
  return {plus, n - plus, n, seed};
}

int sample_single(const SGSetup& setup, std::uint64_t seed, std::uint64_t trial) {
  const double p_plus = projection_probabilities(setup).p_plus;
  return CounterRng(seed).bernoulli(p_plus, kMeasureStream, trial) ? +1 : -1;
}

double binomial_band(double p, std::uint64_t n, double k) {
  return k * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace spinlab
