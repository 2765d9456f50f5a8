#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aqft/bounds.hpp"

using namespace aqft;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("worst-case dropped phase") {
  for (int L = 1; L <= 20; ++L) CHECK(delta_max(L, L) == 0.0);
  CHECK(delta_max(16, 6) ==
        doctest::Approx(2.0 * kPi / 64.0 * (9.0 + std::exp2(-10))).epsilon(1e-15));
  CHECK(delta_max(16, 6) == doctest::Approx(0.8837).epsilon(1e-3));
  CHECK(delta_max_asymptotic(16, 6) == doctest::Approx(2.0 * kPi / 64.0 * 10.0));
  CHECK_THROWS_AS(delta_max(4, 5), std::domain_error);
  CHECK_THROWS_AS(delta_max(4, 0), std::domain_error);
}

TEST_CASE("per-pair dropped phase") {
  for (int L = 1; L <= 6; ++L) {
    const std::int64_t dim = std::int64_t(1) << L;
    for (std::int64_t a = 0; a < dim; ++a) {
      CHECK(phase_defect(a, a, L, L) == 0.0);
      CHECK(phase_defect(a, 0, L, 2 <= L ? 2 : 1) == 0.0);
      CHECK(phase_defect(0, a, L, 1) == 0.0);
    }
  }
  for (int L = 2; L <= 10; ++L) {
    for (int m = 1; m <= L; ++m) {
      const std::int64_t top = (std::int64_t(1) << L) - 1;
      CHECK(phase_defect(top, top, L, m) == delta_max(L, m));
    }
  }
  CHECK_THROWS_AS(phase_defect(-1, 0, 4, 2), std::domain_error);
  CHECK_THROWS_AS(phase_defect(0, 16, 4, 2), std::domain_error);
}

TEST_CASE("exhaustive scan attains the worst case") {
  for (int L = 1; L <= 8; ++L) {
    for (int m = 1; m <= L; ++m) {
      const std::int64_t dim = std::int64_t(1) << L;
      double best = 0.0;
      for (std::int64_t a = 0; a < dim; ++a) {
        for (std::int64_t c = 0; c < dim; ++c) {
          best = std::max(best, phase_defect(a, c, L, m));
        }
      }
      CHECK(best == delta_max(L, m));
    }
  }
}

TEST_CASE("exact-transform probability bound") {
  const QftBound b = prob_qft_lower_bound(9, 10);
  CHECK(b.total == doctest::Approx(0.405285).epsilon(1e-5));
  // per-peak bound times r approaches 4/pi^2 as r/2^L -> 0
  for (int L = 10; L <= 30; L += 10) {
    const QftBound wide = prob_qft_lower_bound(L, 10);
    CHECK(wide.per_peak * 10 ==
          doctest::Approx(4.0 / (kPi * kPi)).epsilon(std::exp2(10 - L) + 1e-6));
  }
  CHECK(prob_qft_lower_bound(20, 10).per_peak * 10 ==
        doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-5));
}

TEST_CASE("approximate-transform probability bound") {
  for (int L = 2; L <= 16; ++L) {
    CHECK(prob_aqft_lower_bound(L, L) == doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-12));
    // non-decreasing in m
    for (int m = 2; m <= L; ++m) {
      CHECK(prob_aqft_lower_bound(L, m) >= prob_aqft_lower_bound(L, m - 1));
    }
  }
  // below the validity threshold the bound clamps to zero
  CHECK(prob_aqft_lower_bound(16, 3) == 0.0);
  CHECK(prob_aqft_lower_bound_asymptotic(40, 40) ==
        doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-12));
}

TEST_CASE("minimal usable degree") {
  const MinOrder L16 = min_order(16);
  CHECK(L16.asymptotic == 6);
  CHECK(L16.exact == 6);
  CHECK(delta_max(16, 6) < kPi / 2.0);
  CHECK(delta_max(16, 5) >= kPi / 2.0);

  const MinOrder L9 = min_order(9);
  CHECK(L9.exact == 5);

  for (const int L : {1, 2, 5, 9, 16, 24}) {
    CHECK(delta_max(L, L) < kPi / 2.0);
    const MinOrder order = min_order(L);
    CHECK(delta_max(L, order.exact) < kPi / 2.0);
    if (order.exact > 1) CHECK(delta_max(L, order.exact - 1) >= kPi / 2.0);
  }
}

TEST_CASE("repeat-count ratio") {
  for (const int L : {4, 9, 16, 32}) {
    CHECK(run_ratio(L, L) == doctest::Approx(1.0).epsilon(1e-12));
    double previous = run_ratio(L, L);
    for (int m = L - 1; m >= min_order(L).exact; --m) {
      const double ratio = run_ratio(L, m);
      CHECK(ratio > previous);
      previous = ratio;
    }
  }
  CHECK_THROWS_AS(run_ratio(16, 3), std::domain_error);

  const double c = empirical_run_ratio_constant(64);
  CHECK(c >= 1.0);
  CHECK(std::isfinite(c));
}
