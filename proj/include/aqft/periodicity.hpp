#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "aqft/state.hpp"

namespace aqft {

/// The comb state parameters: nonzero amplitudes at every a with
/// a mod period == offset.
struct PeriodicStateSpec {
  RegisterSize size;
  std::int64_t period = 1;  // r
  std::int64_t offset = 0;  // l, 0 <= l < r

  PeriodicStateSpec(RegisterSize size, std::int64_t period, std::int64_t offset);

  /// True when 2^L / r drops below 50, where the r << 2^L analysis gets thin.
  bool narrow_regime() const;
};

struct SpectrumResult {
  Eigen::VectorXd probs;                   // Fourier-index order c
  std::vector<std::int64_t> peak_targets;  // nearest integers to multiples of 2^L/r
};

struct QualityResult {
  double Q = 0.0;
  std::map<std::int64_t, double> per_peak;
};

/// Equal-amplitude superposition of every |a> with a mod r == l, normalized
/// by the exact count of such a in [0, 2^L).
StateVector make_periodic_state(const PeriodicStateSpec& spec);

/// {nearest_integer(lambda * 2^L / r) mod 2^L : lambda = 0..r-1}, deduplicated
/// and sorted. Halfway cases round to even.
std::vector<std::int64_t> peak_targets(RegisterSize size, std::int64_t period);

/// Packages transform-output probabilities with the peak-target set.
SpectrumResult spectrum(const Eigen::VectorXd& probs, const PeriodicStateSpec& spec);

/// Q = total probability mass on the peak targets.
QualityResult quality_factor(const SpectrumResult& spectrum);

}  // namespace aqft
