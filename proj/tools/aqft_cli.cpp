#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aqft/bounds.hpp"
#include "aqft/ensemble.hpp"
#include "aqft/network.hpp"
#include "aqft/noise.hpp"
#include "aqft/periodicity.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

struct Manifest {
  std::string subcommand;
  nlohmann::json parameters;
  std::uint64_t master_seed = 0;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void write() const {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    nlohmann::json j{{"subcommand", subcommand},
                     {"parameters", parameters},
                     {"master_seed", master_seed},
                     {"tool_version", kVersion},
                     {"outputs", outputs},
                     {"duration_seconds", seconds}};
    const std::string path = outputs.front() + ".manifest.json";
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << j.dump(2) << "\n";
  }
};

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

void write_sweep_csv(const std::string& path, const std::vector<aqft::SweepRow>& rows) {
  auto f = open_output(path);
  f << "L,m,r,l,delta,n_runs,mean_Q,stderr_Q\n";
  for (const auto& row : rows) {
    f << row.L << ',' << row.m << ',' << row.r << ',' << row.l << ','
      << fmt_double(row.delta) << ',' << row.n_runs << ',' << fmt_double(row.mean_Q)
      << ',' << fmt_double(row.stderr_Q) << '\n';
  }
}

int run_transform(int L, std::int64_t r, std::int64_t l, int m, double delta,
                  std::uint64_t seed, int workers, const std::string& out,
                  const std::string& trace_path) {
  (void)workers;
  aqft::RegisterSize size(L);
  aqft::PeriodicStateSpec spec(size, r, l);
  if (spec.narrow_regime()) {
    std::cerr << "warning: 2^L/r = " << double(size.dim) / double(r)
              << " < 50; the r << 2^L analysis is marginal here\n";
  }
  const aqft::NetworkSpec network = aqft::build_aqft(size, m);
  const aqft::NoiseModel noise{delta, seed};
  aqft::KickTrace trace;
  const aqft::StateVector state =
      aqft::run(network, aqft::make_periodic_state(spec), &noise, 0,
                trace_path.empty() ? nullptr : &trace);
  const Eigen::VectorXcd amps = aqft::fourier_amplitudes(state);
  const auto targets = aqft::peak_targets(size, r);

  auto f = open_output(out);
  f << "c,abs_amplitude,phase,is_peak\n";
  std::size_t t = 0;
  for (std::int64_t c = 0; c < size.dim; ++c) {
    while (t < targets.size() && targets[t] < c) ++t;
    const bool is_peak = t < targets.size() && targets[t] == c;
    f << c << ',' << fmt_double(std::abs(amps[c])) << ','
      << fmt_double(std::arg(amps[c])) << ',' << (is_peak ? 1 : 0) << '\n';
  }

  if (!trace_path.empty()) {
    auto tf = open_output(trace_path);
    for (const auto& kick : trace) {
      tf << nlohmann::json{{"gate_index", kick.gate_index},
                           {"qubit", kick.qubit},
                           {"phi", kick.phi}}
                .dump()
         << '\n';
    }
  }
  return 0;
}

int run_bounds(int L_min, int L_max, int m_min, int m_max, const std::string& out) {
  auto f = open_output(out);
  f << "L,m,delta_max,prob_aqft_bound,min_order,run_ratio,valid\n";
  for (int L = L_min; L <= L_max; ++L) {
    const aqft::MinOrder order = aqft::min_order(L);
    const int hi = std::min(m_max, L);
    for (int m = std::max(m_min, 1); m <= hi; ++m) {
      const double dm = aqft::delta_max(L, m);
      const bool valid = m >= order.exact;
      f << L << ',' << m << ',' << fmt_double(dm) << ','
        << fmt_double(aqft::prob_aqft_lower_bound(L, m)) << ',' << order.exact << ',';
      if (valid) f << fmt_double(aqft::run_ratio(L, m));
      f << ',' << (valid ? 1 : 0) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statevector experiments for exact and approximate quantum Fourier "
               "transforms under dephasing noise"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  int L = 9, m = 9, workers = 0, n_runs = 1000;
  std::int64_t r = 10, l = 8;
  double delta = 0.0, ratio = 0.0;
  std::uint64_t seed = 0;
  std::string out, trace_path;
  std::vector<int> m_values, L_values;
  std::vector<double> delta_values;
  int L_min = 4, L_max = 16, m_min = 1, m_max = 16;

  auto add_common = [&](CLI::App* cmd, bool needs_state) {
    cmd->add_option("--seed", seed, "master RNG seed")->envname("AQFT_SEED");
    cmd->add_option("--out", out, "output CSV path")->required();
    cmd->add_option("--workers", workers, "worker thread cap (0 = hardware)");
    if (needs_state) {
      cmd->add_option("--L", L, "register size")->required();
      cmd->add_option("--r", r, "period");
      cmd->add_option("--l", l, "offset");
      cmd->add_option("--delta", delta, "noise width (radians)");
    }
  };

  CLI::App* transform = app.add_subcommand(
      "transform", "single transform of a periodic state; CSV of c, |amp|, phase");
  add_common(transform, true);
  transform->add_option("--m", m, "approximation degree");
  transform->add_option("--trace", trace_path, "dump applied kicks as JSON lines");

  CLI::App* quality = app.add_subcommand(
      "quality", "mean quality factor of one noisy ensemble");
  add_common(quality, true);
  quality->add_option("--m", m, "approximation degree");
  quality->add_option("--runs", n_runs, "ensemble size");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "quality factor over an (m, delta) grid at fixed L");
  add_common(sweep, true);
  sweep->add_option("--m-values", m_values, "degrees to sweep")->required();
  sweep->add_option("--delta-values", delta_values, "noise widths to sweep")->required();
  sweep->add_option("--runs", n_runs, "ensemble size per grid point");

  CLI::App* scaling = app.add_subcommand(
      "scaling", "exact-transform quality factor versus register size");
  add_common(scaling, false);
  scaling->add_option("--L-values", L_values, "register sizes")->required();
  scaling->add_option("--delta-values", delta_values, "noise widths")->required();
  scaling->add_option("--r", r, "fixed period");
  scaling->add_option("--ratio", ratio, "choose r nearest 2^L / ratio instead");
  scaling->add_option("--l", l, "offset");
  scaling->add_option("--runs", n_runs, "ensemble size per grid point");

  CLI::App* bounds = app.add_subcommand(
      "bounds", "tabulate analytic bounds over an (L, m) grid");
  bounds->add_option("--L-min", L_min, "first register size");
  bounds->add_option("--L-max", L_max, "last register size");
  bounds->add_option("--m-min", m_min, "first degree");
  bounds->add_option("--m-max", m_max, "last degree");
  bounds->add_option("--out", out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Manifest manifest;
  manifest.master_seed = seed;
  try {
    int rc = 0;
    if (*transform) {
      manifest.subcommand = "transform";
      manifest.parameters = {{"L", L}, {"r", r}, {"l", l}, {"m", m}, {"delta", delta}};
      manifest.outputs = {out};
      rc = run_transform(L, r, l, m, delta, seed, workers, out, trace_path);
    } else if (*quality) {
      manifest.subcommand = "quality";
      manifest.parameters = {{"L", L}, {"r", r}, {"l", l}, {"m", m},
                             {"delta", delta}, {"runs", n_runs}, {"workers", workers}};
      manifest.outputs = {out};
      aqft::PeriodicStateSpec spec{aqft::RegisterSize(L), r, l};
      aqft::ExperimentConfig config{spec, m, aqft::NoiseModel{delta, seed}, n_runs,
                                    workers};
      const aqft::EnsembleResult res = aqft::run_ensemble(config);
      write_sweep_csv(out, {{L, m, r, l, delta, n_runs, res.mean_Q, res.stderr_Q}});
    } else if (*sweep) {
      manifest.subcommand = "sweep";
      manifest.parameters = {{"L", L}, {"r", r}, {"l", l}, {"m_values", m_values},
                             {"delta_values", delta_values}, {"runs", n_runs},
                             {"workers", workers}};
      manifest.outputs = {out};
      write_sweep_csv(out, aqft::sweep_m_delta(aqft::RegisterSize(L), r, l, m_values,
                                               delta_values, n_runs, seed, workers));
    } else if (*scaling) {
      manifest.subcommand = "scaling";
      manifest.parameters = {{"L_values", L_values}, {"delta_values", delta_values},
                             {"r", r}, {"ratio", ratio}, {"l", l}, {"runs", n_runs},
                             {"workers", workers}};
      manifest.outputs = {out};
      aqft::PeriodRule rule;
      if (ratio > 0.0) {
        rule = {aqft::PeriodRule::Kind::FixedRatio, 0, ratio};
      } else {
        rule = {aqft::PeriodRule::Kind::FixedPeriod, r, 0.0};
      }
      write_sweep_csv(out, aqft::sweep_L(L_values, delta_values, n_runs, seed, rule, l,
                                         workers));
    } else if (*bounds) {
      manifest.subcommand = "bounds";
      manifest.parameters = {{"L_min", L_min}, {"L_max", L_max},
                             {"m_min", m_min}, {"m_max", m_max}};
      manifest.outputs = {out};
      rc = run_bounds(L_min, L_max, m_min, m_max, out);
    }
    manifest.write();
    return rc;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
