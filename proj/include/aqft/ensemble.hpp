#pragma once

#include <cstdint>
#include <vector>

#include "aqft/noise.hpp"
#include "aqft/periodicity.hpp"

namespace aqft {

/// One ensemble experiment: many noisy realizations of the same transform
/// on the same periodic input. Realization i uses realization_seed = i, so
/// runs 0..N-1 are a prefix of any larger ensemble with the same seeds.
struct ExperimentConfig {
  PeriodicStateSpec state_spec;
  int degree;  // m
  NoiseModel noise;
  int n_runs = 1000;
  int workers = 0;  // 0 = hardware concurrency
  bool keep_per_run = false;
};

struct EnsembleResult {
  double mean_Q = 0.0;
  double stderr_Q = 0.0;  // sample stddev / sqrt(n_runs)
  int n_runs = 0;
  std::vector<double> per_run_Q;  // only when keep_per_run
};

/// Runs the ensemble, possibly across worker threads. Results are invariant
/// to the worker count: per-run quality factors are stored by run index and
/// reduced in index order.
EnsembleResult run_ensemble(const ExperimentConfig& config);

struct SweepRow {
  int L;
  int m;
  std::int64_t r;
  std::int64_t l;
  double delta;
  int n_runs;
  double mean_Q;
  double stderr_Q;
};

/// One ensemble per (m, delta) grid point at fixed (L, r, l).
std::vector<SweepRow> sweep_m_delta(RegisterSize size, std::int64_t r, std::int64_t l,
                                    const std::vector<int>& m_values,
                                    const std::vector<double>& delta_values,
                                    int n_runs, std::uint64_t master_seed,
                                    int workers = 0);

/// Chooses the period for each register size in a scaling sweep: either a
/// fixed r, or r closest to 2^L / ratio.
struct PeriodRule {
  enum class Kind { FixedPeriod, FixedRatio };
  Kind kind = Kind::FixedPeriod;
  std::int64_t period = 10;
  double ratio = 0.0;  // dim / r when kind == FixedRatio

  std::int64_t period_for(RegisterSize size) const;
};

/// Exact-transform (m = L) ensembles over a (L, delta) grid.
std::vector<SweepRow> sweep_L(const std::vector<int>& L_values,
                              const std::vector<double>& delta_values, int n_runs,
                              std::uint64_t master_seed, const PeriodRule& rule,
                              std::int64_t offset, int workers = 0);

}  // namespace aqft
