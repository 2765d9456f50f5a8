#include "aqft/periodicity.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aqft {

PeriodicStateSpec::PeriodicStateSpec(RegisterSize size_, std::int64_t period_,
                                     std::int64_t offset_)
    : size(size_), period(period_), offset(offset_) {
  if (period < 1 || period > size.dim) {
    throw std::domain_error("period must satisfy 1 <= r <= 2^L, got r=" +
                            std::to_string(period));
  }
  if (offset < 0 || offset >= period) {
    throw std::domain_error("offset must satisfy 0 <= l < r, got l=" +
                            std::to_string(offset));
  }
}

bool PeriodicStateSpec::narrow_regime() const { return size.dim / period < 50; }

StateVector make_periodic_state(const PeriodicStateSpec& spec) {
  // Exact count of matching indices: a = l, l + r, ...
  const std::int64_t count = (spec.size.dim - 1 - spec.offset) / spec.period + 1;
  StateVector state{spec.size, Eigen::VectorXcd::Zero(spec.size.dim)};
  const double amp = 1.0 / std::sqrt(double(count));
  for (std::int64_t a = spec.offset; a < spec.size.dim; a += spec.period) {
    state.amplitudes[a] = Complex{amp, 0.0};
  }
  return state;
}

std::vector<std::int64_t> peak_targets(RegisterSize size, std::int64_t period) {
  std::vector<std::int64_t> targets;
  targets.reserve(std::size_t(period));
  for (std::int64_t lambda = 0; lambda < period; ++lambda) {
    // nearbyint under the default rounding mode: ties to even.
    const double exact = double(lambda) * double(size.dim) / double(period);
    const std::int64_t c = std::int64_t(std::nearbyint(exact)) % size.dim;
    targets.push_back(c);
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  return targets;
}

SpectrumResult spectrum(const Eigen::VectorXd& probs, const PeriodicStateSpec& spec) {
  if (probs.size() != spec.size.dim) {
    throw std::domain_error("probability vector length does not match 2^L");
  }
  return {probs, peak_targets(spec.size, spec.period)};
}

QualityResult quality_factor(const SpectrumResult& spectrum) {
  QualityResult result;
  for (const std::int64_t c : spectrum.peak_targets) {
    const double p = spectrum.probs[c];
    result.per_peak[c] = p;
    result.Q += p;
  }
  return result;
}

}  // namespace aqft
