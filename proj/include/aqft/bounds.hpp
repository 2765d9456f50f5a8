#pragma once

#include <cstdint>

namespace aqft {

/// Worst-case phase dropped by the degree-m approximation over all basis
/// index pairs: (2*pi/2^m)(L - m - 1 + 2^(m-L)). Attained at a = c = 2^L - 1.
double delta_max(int L, int m);

/// Large-L form (2*pi/2^m)(L - m).
double delta_max_asymptotic(int L, int m);

/// Phase dropped for one (a, c) pair: (2*pi/2^L) * sum of a_j c_k 2^(j+k)
/// over bit pairs with j + k <= L - m - 1. Terms with j + k >= L are whole
/// turns and are never counted, so the value is 0 for m = L and its maximum
/// over (a, c) is exactly delta_max(L, m).
double phase_defect(std::int64_t a, std::int64_t c, int L, int m);

/// Success-probability lower bound for the exact transform on a period-r comb.
struct QftBound {
  double per_peak;  // (r/2^(2L)) / sin^2(pi r / 2^(L+1))
  double total;     // 4/pi^2
};
QftBound prob_qft_lower_bound(int L, std::int64_t r);

/// (8/pi^2) sin^2((pi/2 - delta_max)/2), clamped to 0 once delta_max >= pi/2.
double prob_aqft_lower_bound(int L, int m);

/// Large-L form (8/pi^2) sin^2((pi/4)(m/L)).
double prob_aqft_lower_bound_asymptotic(int L, int m);

/// Smallest usable approximation degree.
struct MinOrder {
  int asymptotic;  // smallest m with m >= log2(L) + 2
  int exact;       // smallest m with delta_max(L, m) < pi/2
};
MinOrder min_order(int L);

/// Repeat-count ratio k'/k = log(1 - p) / log(1 - p') with p = 4/pi^2 and
/// p' the asymptotic approximate-transform bound. Throws std::domain_error
/// below the exact min_order, where the bound degenerates.
double run_ratio(int L, int m);

/// max over 1 <= L <= max_L and valid m of (k'/k) / (L/m)^3.
double empirical_run_ratio_constant(int max_L);

}  // namespace aqft
