#pragma once

#include <Eigen/Dense>

namespace aqft {

// Brute-force dense reference transforms, test ground truth only. They fix
// the readout convention: the gate network is correct when run + reversed
// readout matches these matrices.

inline constexpr int kMaxOracleQubits = 12;  // s^2 entries

/// Entry (c, a) = exp(2*pi*i*a*c / 2^L) / sqrt(2^L).
Eigen::MatrixXcd dft_matrix(int L);

/// Entry (c, a) = exp(i*(2*pi*a*c/2^L - defect(a, c))) / sqrt(2^L) with the
/// degree-m truncated phases. m = L reproduces dft_matrix; m = 1 is the
/// Hadamard transform.
Eigen::MatrixXcd aqft_matrix(int L, int m);

}  // namespace aqft
