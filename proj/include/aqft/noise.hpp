#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "aqft/network.hpp"
#include "aqft/state.hpp"

namespace aqft {

/// Gaussian phase-kick dephasing attached to B-gate applications.
/// delta = 0 is bit-identical to a noiseless run.
struct NoiseModel {
  double delta = 0.0;  // standard deviation of the kick, radians
  std::uint64_t master_seed = 0;
};

/// One kick actually applied during a realization.
struct KickRecord {
  std::size_t gate_index;
  int qubit;
  double phi;
};

/// Counter-based stream: draw n is mix64(key + n * golden-ratio increment),
/// so streams are stateless apart from the counter and any draw can be
/// reproduced from (key, n) alone. Gaussians come from a Box-Muller pair of
/// counter-derived uniforms; this mapping is part of the stable contract
/// (golden-trace tested).
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64();
  double next_uniform();   // in (0, 1]
  double next_gaussian();  // standard normal

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Key for the stream owned by (realization, gate, qubit-slot).
std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t realization,
                         std::uint64_t gate_index, int slot);

/// One draw from Normal(0, delta^2); exactly 0.0 when delta == 0.
double sample_phase(double delta, RngStream& stream);

/// Diagonal dephasing unitary on one qubit: bit 0 amplitudes pick up
/// exp(-i*phi), bit 1 amplitudes exp(+i*phi). phi == 0 leaves the state
/// bit-identical.
void apply_kick(StateVector& state, int qubit, double phi);

/// The (phi_j, phi_k) pair for one B-gate application, derived only from
/// (master_seed, realization_seed, gate_index, slot) so results do not
/// depend on execution order. Throws std::logic_error for an A gate.
std::pair<double, double> kicks_for_gate(const NoiseModel& model,
                                         std::uint64_t realization_seed,
                                         std::size_t gate_index, const GateOp& gate);

}  // namespace aqft
