#include "aqft/state.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace aqft {

RegisterSize::RegisterSize(int L) : qubits(L) {
  if (L < 1 || L > kMaxQubits) {
    throw std::domain_error("register size must satisfy 1 <= L <= " +
                            std::to_string(kMaxQubits) + ", got " + std::to_string(L));
  }
  dim = std::int64_t(1) << L;
}

StateVector new_basis_state(RegisterSize size, std::int64_t a) {
  if (a < 0 || a >= size.dim) {
    throw std::domain_error("basis index " + std::to_string(a) +
                            " out of range for L=" + std::to_string(size.qubits));
  }
  StateVector state{size, Eigen::VectorXcd::Zero(size.dim)};
  state.amplitudes[a] = Complex{1.0, 0.0};
  return state;
}

StateVector random_state(RegisterSize size, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  StateVector state{size, Eigen::VectorXcd(size.dim)};
  for (std::int64_t a = 0; a < size.dim; ++a) {
    state.amplitudes[a] = Complex{dist(gen), dist(gen)};
  }
  state.amplitudes.normalize();
  return state;
}

void apply_single_qubit(StateVector& state, int qubit, const Eigen::Matrix2cd& u) {
  if (qubit < 0 || qubit >= state.size.qubits) {
    throw std::domain_error("qubit index " + std::to_string(qubit) + " out of range");
  }
  if (!(u * u.adjoint()).isIdentity(kUnitaryTol)) {
    throw std::invalid_argument("single-qubit gate is not unitary within tolerance");
  }
  const std::int64_t mask = std::int64_t(1) << qubit;
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  auto& amp = state.amplitudes;
  for (std::int64_t a = 0; a < state.size.dim; ++a) {
    if ((a & mask) == 0) {
      const std::int64_t b = a | mask;
      const Complex a0 = amp[a];
      const Complex a1 = amp[b];
      amp[a] = u00 * a0 + u01 * a1;
      amp[b] = u10 * a0 + u11 * a1;
    }
  }
}

void apply_controlled_phase(StateVector& state, int j, int k, double theta) {
  if (j == k) {
    throw std::domain_error("controlled phase needs two distinct qubits");
  }
  if (j < 0 || j >= state.size.qubits || k < 0 || k >= state.size.qubits) {
    throw std::domain_error("controlled phase qubit index out of range");
  }
  const std::int64_t mask = (std::int64_t(1) << j) | (std::int64_t(1) << k);
  const Complex phase = std::polar(1.0, theta);
  auto& amp = state.amplitudes;
  for (std::int64_t a = 0; a < state.size.dim; ++a) {
    if ((a & mask) == mask) amp[a] *= phase;
  }
}

Eigen::VectorXd probabilities(const StateVector& state) {
  return state.amplitudes.cwiseAbs2();
}

}  // namespace aqft
