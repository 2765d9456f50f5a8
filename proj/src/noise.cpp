#include "aqft/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aqft {

namespace {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t RngStream::next_u64() {
  return mix64(key_ + counter_++ * 0x9e3779b97f4a7c15ull);
}

double RngStream::next_uniform() {
  // 53-bit mantissa, shifted into (0, 1].
  return double((next_u64() >> 11) + 1) * 0x1p-53;
}

double RngStream::next_gaussian() {
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t realization,
                         std::uint64_t gate_index, int slot) {
  std::uint64_t k = mix64(master_seed);
  k = mix64(k ^ realization);
  k = mix64(k ^ gate_index);
  return mix64(k ^ std::uint64_t(slot));
}

double sample_phase(double delta, RngStream& stream) {
  if (delta < 0.0) throw std::domain_error("noise width delta must be >= 0");
  if (delta == 0.0) return 0.0;
  return delta * stream.next_gaussian();
}

void apply_kick(StateVector& state, int qubit, double phi) {
  if (qubit < 0 || qubit >= state.size.qubits) {
    throw std::domain_error("kick qubit index out of range");
  }
  if (phi == 0.0) return;
  const std::int64_t mask = std::int64_t(1) << qubit;
  const Complex lo = std::polar(1.0, -phi);
  const Complex hi = std::polar(1.0, phi);
  auto& amp = state.amplitudes;
  for (std::int64_t a = 0; a < state.size.dim; ++a) {
    amp[a] *= (a & mask) ? hi : lo;
  }
}

std::pair<double, double> kicks_for_gate(const NoiseModel& model,
                                         std::uint64_t realization_seed,
                                         std::size_t gate_index, const GateOp& gate) {
  if (gate.kind != GateOp::Kind::B) {
    throw std::logic_error("phase kicks are attached to B gates only");
  }
  if (model.delta == 0.0) return {0.0, 0.0};
  RngStream stream_j(stream_key(model.master_seed, realization_seed, gate_index, 0));
  RngStream stream_k(stream_key(model.master_seed, realization_seed, gate_index, 1));
  return {sample_phase(model.delta, stream_j), sample_phase(model.delta, stream_k)};
}

}  // namespace aqft
