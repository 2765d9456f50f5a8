#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "aqft/state.hpp"

namespace aqft {

struct NoiseModel;
struct KickRecord;
using KickTrace = std::vector<KickRecord>;

/// One elementary gate: A (Hadamard-type rotation on `target`) or B
/// (conditional phase exp(i*theta) between qubits j < k, theta = pi/2^(k-j)).
struct GateOp {
  enum class Kind { A, B };
  Kind kind;
  int target = 0;   // A: the qubit; B: the lower qubit j
  int partner = 0;  // B only: the higher qubit k
  double theta = 0.0;

  static GateOp a(int target) { return {Kind::A, target, 0, 0.0}; }
  static GateOp b(int j, int k, double theta) { return {Kind::B, j, k, theta}; }
};

/// An ordered gate program for the (approximate) Fourier transform on L
/// qubits. Output bits are read in reversed order; see read_output.
struct NetworkSpec {
  RegisterSize size;
  int degree = 0;  // m; degree == L is the exact transform
  std::vector<GateOp> gates;
  bool readout_reversed = true;
};

/// Full transform network: L A-gates and L(L-1)/2 B-gates in the pattern
/// (A_{L-1})(B_{L-2,L-1} A_{L-2}) ... (B_{0,L-1} ... B_{0,1} A_0).
NetworkSpec build_qft(RegisterSize size);

/// Degree-m approximation: the QFT network with every B gate of qubit
/// distance k - j >= m removed, leaving (2L-m)(m-1)/2 B gates. m == L
/// reproduces build_qft exactly; m == 1 is the Hadamard transform.
NetworkSpec build_aqft(RegisterSize size, int m);

/// Applies the gate program left to right. When `noise` is non-null every
/// B-gate application is preceded by one independent Gaussian phase kick on
/// each of its two qubits (A gates stay noiseless); `trace`, when non-null,
/// records the kicks actually applied.
StateVector run(const NetworkSpec& network, const StateVector& input,
                const NoiseModel* noise = nullptr, std::uint64_t realization_seed = 0,
                KickTrace* trace = nullptr);

/// Reverses the low `bits` bits of x.
std::int64_t bit_reverse(std::int64_t x, int bits);

/// Amplitude of Fourier index c, i.e. amplitudes permuted by the reversed
/// readout: out[c] = amp[bit_reverse(c)].
Eigen::VectorXcd fourier_amplitudes(const StateVector& state);

/// Probability of measuring Fourier index c after the transform.
Eigen::VectorXd read_output(const StateVector& state);

void to_json(nlohmann::json& j, const GateOp& gate);
void to_json(nlohmann::json& j, const NetworkSpec& network);

}  // namespace aqft
