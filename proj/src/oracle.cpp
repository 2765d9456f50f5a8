#include "aqft/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "aqft/bounds.hpp"

namespace aqft {

namespace {

void check_size(int L) {
  if (L < 1) throw std::domain_error("need L >= 1");
  if (L > kMaxOracleQubits) {
    throw std::length_error("dense oracle capped at L <= " +
                            std::to_string(kMaxOracleQubits));
  }
}

}  // namespace

Eigen::MatrixXcd dft_matrix(int L) {
  check_size(L);
  const std::int64_t dim = std::int64_t(1) << L;
  const double norm = 1.0 / std::sqrt(double(dim));
  Eigen::MatrixXcd u(dim, dim);
  for (std::int64_t c = 0; c < dim; ++c) {
    for (std::int64_t a = 0; a < dim; ++a) {
      const double phase = 2.0 * std::numbers::pi * double((a * c) % dim) / double(dim);
      u(c, a) = std::polar(norm, phase);
    }
  }
  return u;
}

Eigen::MatrixXcd aqft_matrix(int L, int m) {
  check_size(L);
  const std::int64_t dim = std::int64_t(1) << L;
  const double norm = 1.0 / std::sqrt(double(dim));
  Eigen::MatrixXcd u(dim, dim);
  for (std::int64_t c = 0; c < dim; ++c) {
    for (std::int64_t a = 0; a < dim; ++a) {
      const double phase = 2.0 * std::numbers::pi * double((a * c) % dim) / double(dim) -
                           phase_defect(a, c, L, m);
      u(c, a) = std::polar(norm, phase);
    }
  }
  return u;
}

}  // namespace aqft
