#include "aqft/network.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "aqft/noise.hpp"

namespace aqft {

namespace {

const Eigen::Matrix2cd kGateA = [] {
  Eigen::Matrix2cd h;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
  return h;
}();

}  // namespace

NetworkSpec build_aqft(RegisterSize size, int m) {
  const int L = size.qubits;
  if (m < 1 || m > L) {
    throw std::domain_error("approximation degree must satisfy 1 <= m <= L, got m=" +
                            std::to_string(m));
  }
  NetworkSpec network{size, m, {}, true};
  network.gates.reserve(std::size_t(L) + std::size_t(2 * L - m) * (m - 1) / 2);
  for (int t = L - 1; t >= 0; --t) {
    // B gates pairing t with already-processed higher qubits, kept while the
    // qubit distance k - t stays below m.
    for (int k = L - 1; k > t; --k) {
      const int d = k - t;
      if (d > m - 1) continue;
      network.gates.push_back(GateOp::b(t, k, std::numbers::pi / double(std::int64_t(1) << d)));
    }
    network.gates.push_back(GateOp::a(t));
  }
  return network;
}

NetworkSpec build_qft(RegisterSize size) { return build_aqft(size, size.qubits); }

StateVector run(const NetworkSpec& network, const StateVector& input,
                const NoiseModel* noise, std::uint64_t realization_seed,
                KickTrace* trace) {
  if (!(network.size == input.size)) {
    throw std::domain_error("network and input register sizes differ");
  }
  StateVector state = input;
  for (std::size_t g = 0; g < network.gates.size(); ++g) {
    const GateOp& gate = network.gates[g];
    if (gate.kind == GateOp::Kind::A) {
      apply_single_qubit(state, gate.target, kGateA);
      continue;
    }
    if (noise != nullptr) {
      const auto [phi_j, phi_k] = kicks_for_gate(*noise, realization_seed, g, gate);
      apply_kick(state, gate.target, phi_j);
      apply_kick(state, gate.partner, phi_k);
      if (trace != nullptr) {
        trace->push_back({g, gate.target, phi_j});
        trace->push_back({g, gate.partner, phi_k});
      }
    }
    apply_controlled_phase(state, gate.target, gate.partner, gate.theta);
  }
  return state;
}

std::int64_t bit_reverse(std::int64_t x, int bits) {
  std::int64_t out = 0;
  for (int i = 0; i < bits; ++i) {
    out = (out << 1) | ((x >> i) & 1);
  }
  return out;
}

Eigen::VectorXcd fourier_amplitudes(const StateVector& state) {
  const int L = state.size.qubits;
  Eigen::VectorXcd out(state.size.dim);
  for (std::int64_t c = 0; c < state.size.dim; ++c) {
    out[c] = state.amplitudes[bit_reverse(c, L)];
  }
  return out;
}

Eigen::VectorXd read_output(const StateVector& state) {
  return fourier_amplitudes(state).cwiseAbs2();
}

void to_json(nlohmann::json& j, const GateOp& gate) {
  if (gate.kind == GateOp::Kind::A) {
    j = {{"kind", "A"}, {"target", gate.target}};
  } else {
    j = {{"kind", "B"}, {"j", gate.target}, {"k", gate.partner}, {"theta", gate.theta}};
  }
}

void to_json(nlohmann::json& j, const NetworkSpec& network) {
  j = {{"L", network.size.qubits},
       {"m", network.degree},
       {"readout_reversed", network.readout_reversed},
       {"gates", network.gates}};
}

}  // namespace aqft
