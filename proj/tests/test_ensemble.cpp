#include <doctest.h>

#include <cmath>

#include "aqft/ensemble.hpp"
#include "aqft/network.hpp"

using namespace aqft;

namespace {

PeriodicStateSpec default_comb() { return {RegisterSize(9), 10, 8}; }

}  // namespace

TEST_CASE("noiseless ensemble is deterministic with zero spread") {
  ExperimentConfig config{default_comb(), 9, NoiseModel{0.0, 1}, 20};
  const EnsembleResult res = run_ensemble(config);
  CHECK(res.stderr_Q == 0.0);

  const Eigen::VectorXd probs =
      read_output(run(build_qft(config.state_spec.size),
                      make_periodic_state(config.state_spec)));
  const double direct = quality_factor(spectrum(probs, config.state_spec)).Q;
  CHECK(res.mean_Q == direct);
}

TEST_CASE("same seed reproduces the mean exactly") {
  ExperimentConfig config{default_comb(), 7, NoiseModel{0.3, 42}, 100};
  const EnsembleResult a = run_ensemble(config);
  const EnsembleResult b = run_ensemble(config);
  CHECK(a.mean_Q == b.mean_Q);
  CHECK(a.stderr_Q == b.stderr_Q);
}

TEST_CASE("results do not depend on the worker count") {
  ExperimentConfig config{default_comb(), 6, NoiseModel{0.3, 7}, 64, 1, true};
  const EnsembleResult serial = run_ensemble(config);
  for (const int workers : {2, 4, 8}) {
    config.workers = workers;
    const EnsembleResult parallel = run_ensemble(config);
    CHECK(parallel.mean_Q == serial.mean_Q);
    CHECK(parallel.stderr_Q == serial.stderr_Q);
    CHECK(parallel.per_run_Q == serial.per_run_Q);
  }
}

TEST_CASE("smaller ensembles are prefixes of larger ones") {
  ExperimentConfig small{default_comb(), 8, NoiseModel{0.2, 5}, 50, 0, true};
  ExperimentConfig large = small;
  large.n_runs = 100;
  const EnsembleResult a = run_ensemble(small);
  const EnsembleResult b = run_ensemble(large);
  for (int i = 0; i < 50; ++i) CHECK(a.per_run_Q[std::size_t(i)] == b.per_run_Q[std::size_t(i)]);
}

TEST_CASE("standard error shrinks like one over root n") {
  ExperimentConfig config{default_comb(), 9, NoiseModel{0.3, 11}, 400};
  const double se_small = run_ensemble(config).stderr_Q;
  config.n_runs = 1600;
  const double se_large = run_ensemble(config).stderr_Q;
  const double shrink = se_small / se_large;  // ideal: 2
  CHECK(shrink > 2.0 / 1.5);
  CHECK(shrink < 2.0 * 1.5);
}

TEST_CASE("golden mean for the reference noisy configuration") {
  // Frozen from the first run of this configuration; guards the whole
  // noise + transform + scoring pipeline against silent drift.
  ExperimentConfig config{default_comb(), 9, NoiseModel{0.3, 0}, 2000};
  const EnsembleResult res = run_ensemble(config);
  CHECK(res.mean_Q == doctest::Approx(0.11459535668318106).epsilon(1e-12));
  // strictly below the noiseless value
  ExperimentConfig clean = config;
  clean.noise.delta = 0.0;
  clean.n_runs = 1;
  CHECK(res.mean_Q < run_ensemble(clean).mean_Q);
}

TEST_CASE("sweep grids have the expected shape") {
  const auto rows = sweep_m_delta(RegisterSize(5), 6, 1, {3, 4, 5}, {0.0, 0.2}, 10, 3);
  CHECK(rows.size() == 6);
  for (const auto& row : rows) {
    CHECK(row.L == 5);
    CHECK(row.r == 6);
    CHECK(row.n_runs == 10);
    CHECK(row.mean_Q >= 0.0);
    CHECK(row.mean_Q <= 1.0 + 1e-9);
  }

  const PeriodRule fixed{PeriodRule::Kind::FixedPeriod, 6, 0.0};
  const auto scaling = sweep_L({5, 6}, {0.0, 0.1}, 10, 3, fixed, 1);
  CHECK(scaling.size() == 4);
  for (const auto& row : scaling) CHECK(row.m == row.L);

  const PeriodRule ratio{PeriodRule::Kind::FixedRatio, 0, 8.0};
  CHECK(ratio.period_for(RegisterSize(6)) == 8);
}

TEST_CASE("invalid run count is rejected") {
  ExperimentConfig config{default_comb(), 9, NoiseModel{}, 0};
  CHECK_THROWS_AS(run_ensemble(config), std::domain_error);
}
