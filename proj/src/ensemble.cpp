#include "aqft/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "aqft/network.hpp"

namespace aqft {

EnsembleResult run_ensemble(const ExperimentConfig& config) {
  if (config.n_runs < 1) throw std::domain_error("ensemble needs n_runs >= 1");

  const NetworkSpec network = build_aqft(config.state_spec.size, config.degree);
  const StateVector input = make_periodic_state(config.state_spec);
  const SpectrumResult reference = spectrum(Eigen::VectorXd::Zero(input.size.dim),
                                            config.state_spec);

  // All realizations coincide without noise; one run gives the exact mean
  // and a spread of exactly zero.
  if (config.noise.delta == 0.0) {
    const StateVector out = run(network, input, &config.noise, 0);
    SpectrumResult s{read_output(out), reference.peak_targets};
    const double q = quality_factor(s).Q;
    EnsembleResult result{q, 0.0, config.n_runs, {}};
    if (config.keep_per_run) result.per_run_Q.assign(std::size_t(config.n_runs), q);
    return result;
  }

  std::vector<double> per_run(std::size_t(config.n_runs));
  const auto worker = [&](std::atomic<int>& next) {
    for (int i = next.fetch_add(1); i < config.n_runs; i = next.fetch_add(1)) {
      const StateVector out =
          run(network, input, &config.noise, std::uint64_t(i));
      SpectrumResult s{read_output(out), reference.peak_targets};
      per_run[std::size_t(i)] = quality_factor(s).Q;
    }
  };

  int n_workers = config.workers > 0 ? config.workers
                                     : int(std::thread::hardware_concurrency());
  if (n_workers < 1) n_workers = 1;
  if (n_workers > config.n_runs) n_workers = config.n_runs;
  if (n_workers == 1) {
    std::atomic<int> next{0};
    worker(next);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> threads;
    threads.reserve(std::size_t(n_workers));
    for (int w = 0; w < n_workers; ++w) threads.emplace_back(worker, std::ref(next));
    for (auto& t : threads) t.join();
  }

  // Reduction in run-index order keeps results independent of scheduling.
  EnsembleResult result;
  result.n_runs = config.n_runs;
  double sum = 0.0;
  for (const double q : per_run) sum += q;
  result.mean_Q = sum / double(config.n_runs);
  double ss = 0.0;
  for (const double q : per_run) ss += (q - result.mean_Q) * (q - result.mean_Q);
  if (config.n_runs > 1) {
    result.stderr_Q =
        std::sqrt(ss / double(config.n_runs - 1)) / std::sqrt(double(config.n_runs));
  }
  if (config.keep_per_run) result.per_run_Q = std::move(per_run);
  return result;
}

std::vector<SweepRow> sweep_m_delta(RegisterSize size, std::int64_t r, std::int64_t l,
                                    const std::vector<int>& m_values,
                                    const std::vector<double>& delta_values,
                                    int n_runs, std::uint64_t master_seed,
                                    int workers) {
  std::vector<SweepRow> rows;
  rows.reserve(m_values.size() * delta_values.size());
  const PeriodicStateSpec spec(size, r, l);
  for (const double delta : delta_values) {
    for (const int m : m_values) {
      ExperimentConfig config{spec, m, NoiseModel{delta, master_seed}, n_runs, workers};
      const EnsembleResult res = run_ensemble(config);
      rows.push_back({size.qubits, m, r, l, delta, n_runs, res.mean_Q, res.stderr_Q});
    }
  }
  return rows;
}

std::int64_t PeriodRule::period_for(RegisterSize size) const {
  if (kind == Kind::FixedPeriod) return period;
  if (ratio <= 0.0) throw std::domain_error("period ratio must be positive");
  std::int64_t r = std::int64_t(std::llround(double(size.dim) / ratio));
  if (r < 1) r = 1;
  if (r >= size.dim) r = size.dim - 1;
  return r;
}

std::vector<SweepRow> sweep_L(const std::vector<int>& L_values,
                              const std::vector<double>& delta_values, int n_runs,
                              std::uint64_t master_seed, const PeriodRule& rule,
                              std::int64_t offset, int workers) {
  std::vector<SweepRow> rows;
  rows.reserve(L_values.size() * delta_values.size());
  for (const double delta : delta_values) {
    for (const int L : L_values) {
      const RegisterSize size(L);
      const std::int64_t r = rule.period_for(size);
      const std::int64_t l = offset < r ? offset : r - 1;
      const PeriodicStateSpec spec(size, r, l);
      ExperimentConfig config{spec, L, NoiseModel{delta, master_seed}, n_runs, workers};
      const EnsembleResult res = run_ensemble(config);
      rows.push_back({L, L, r, l, delta, n_runs, res.mean_Q, res.stderr_Q});
    }
  }
  return rows;
}

}  // namespace aqft
