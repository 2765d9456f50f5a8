#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace aqft {

using Complex = std::complex<double>;

// Repo-wide numeric tolerances.
inline constexpr double kNormTol = 1e-10;     // statevector norm drift
inline constexpr double kUnitaryTol = 1e-12;  // unitarity of supplied 2x2 gates

// Hard cap on register size; memory is 2^L complex numbers.
inline constexpr int kMaxQubits = 24;

/// Number of qubits L and the derived dimension 2^L.
struct RegisterSize {
  int qubits = 0;
  std::int64_t dim = 0;

  explicit RegisterSize(int L);

  friend bool operator==(const RegisterSize&, const RegisterSize&) = default;
};

/// Dense quantum register: 2^L complex amplitudes indexed by the basis
/// integer a, where qubit i carries the bit of significance 2^i.
struct StateVector {
  RegisterSize size;
  Eigen::VectorXcd amplitudes;
};

/// |a> with amplitude 1 at basis index a.
StateVector new_basis_state(RegisterSize size, std::int64_t a);

/// Random normalized state, for tests. Deterministic given seed.
StateVector random_state(RegisterSize size, std::uint64_t seed);

/// Applies a 2x2 unitary to one qubit. Throws std::domain_error on a bad
/// qubit index and std::invalid_argument if u is not unitary within
/// kUnitaryTol.
void apply_single_qubit(StateVector& state, int qubit, const Eigen::Matrix2cd& u);

/// Multiplies by exp(i*theta) every amplitude whose basis index has bit j
/// and bit k both set. Symmetric in (j, k); throws std::domain_error when
/// j == k or either index is out of range.
void apply_controlled_phase(StateVector& state, int j, int k, double theta);

/// |amp(a)|^2 for every basis index a.
Eigen::VectorXd probabilities(const StateVector& state);

}  // namespace aqft
