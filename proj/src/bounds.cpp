#include "aqft/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace aqft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kQftTotalBound = 4.0 / (std::numbers::pi * std::numbers::pi);

void check_degree(int L, int m) {
  if (L < 1 || m < 1 || m > L) {
    throw std::domain_error("need 1 <= m <= L, got L=" + std::to_string(L) +
                            " m=" + std::to_string(m));
  }
}

}  // namespace

double delta_max(int L, int m) {
  check_degree(L, m);
  return kTwoPi / std::exp2(m) * (double(L - m - 1) + std::exp2(m - L));
}

double delta_max_asymptotic(int L, int m) {
  check_degree(L, m);
  return kTwoPi / std::exp2(m) * double(L - m);
}

double phase_defect(std::int64_t a, std::int64_t c, int L, int m) {
  check_degree(L, m);
  const std::int64_t dim = std::int64_t(1) << L;
  if (a < 0 || a >= dim || c < 0 || c >= dim) {
    throw std::domain_error("basis indices must lie in [0, 2^L)");
  }
  std::uint64_t dropped = 0;  // sum of a_j c_k 2^(j+k), j + k <= L - m - 1
  for (int j = 0; j <= L - m - 1; ++j) {
    if (((a >> j) & 1) == 0) continue;
    for (int k = 0; k + j <= L - m - 1; ++k) {
      if ((c >> k) & 1) dropped += std::uint64_t(1) << (j + k);
    }
  }
  return kTwoPi / double(dim) * double(dropped);
}

QftBound prob_qft_lower_bound(int L, std::int64_t r) {
  if (L < 1 || r < 1) throw std::domain_error("need L >= 1 and r >= 1");
  const double dim = std::exp2(L);
  const double s = std::sin(std::numbers::pi * double(r) / (2.0 * dim));
  return {double(r) / (dim * dim) / (s * s), kQftTotalBound};
}

double prob_aqft_lower_bound(int L, int m) {
  const double dm = delta_max(L, m);
  if (dm >= std::numbers::pi / 2.0) return 0.0;
  const double s = std::sin(0.5 * (std::numbers::pi / 2.0 - dm));
  return 2.0 * kQftTotalBound * s * s;
}

double prob_aqft_lower_bound_asymptotic(int L, int m) {
  check_degree(L, m);
  const double s = std::sin(std::numbers::pi / 4.0 * double(m) / double(L));
  return 2.0 * kQftTotalBound * s * s;
}

MinOrder min_order(int L) {
  if (L < 1) throw std::domain_error("need L >= 1");
  MinOrder order{L, L};
  for (int m = 1; m <= L; ++m) {
    if (double(m) >= std::log2(double(L)) + 2.0) {
      order.asymptotic = m;
      break;
    }
  }
  for (int m = 1; m <= L; ++m) {
    if (delta_max(L, m) < std::numbers::pi / 2.0) {
      order.exact = m;
      break;
    }
  }
  return order;
}

double run_ratio(int L, int m) {
  check_degree(L, m);
  if (m < min_order(L).exact) {
    throw std::domain_error("run ratio undefined below the minimal usable degree");
  }
  const double p = kQftTotalBound;
  const double p_approx = prob_aqft_lower_bound_asymptotic(L, m);
  return std::log1p(-p) / std::log1p(-p_approx);
}

double empirical_run_ratio_constant(int max_L) {
  double best = 0.0;
  for (int L = 1; L <= max_L; ++L) {
    for (int m = min_order(L).exact; m <= L; ++m) {
      const double scale = double(L) / double(m);
      best = std::max(best, run_ratio(L, m) / (scale * scale * scale));
    }
  }
  return best;
}

}  // namespace aqft
