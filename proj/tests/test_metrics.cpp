#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "foelner/group_z.hpp"
#include "foelner/metrics.hpp"
#include "oracles.hpp"

using namespace foelner;

namespace {
constexpr double kTheta = 0.381966;
}

TEST_CASE("identity has vanishing ratios") {
  const RatioReport r =
      foelner_ratios(CrossedSymbol::identity(kTheta), WindowSpec{4, 3});
  CHECK(r.r_comm_2 == 0.0);
  CHECK(r.r_comm_1 == 0.0);
  CHECK(r.r_corner_2 == 0.0);
  CHECK(r.r_corner_1 == 0.0);
  CHECK(r.qd_norm == 0.0);
}

TEST_CASE("translation generator reduces to the group ratio") {
  for (long k : {1L, 2L, 5L}) {
    for (long n : {1L, 3L, 8L}) {
      const double expected = foelner::symdiff_ratio(k, n).value();
      for (long m : {0L, 2L, 7L}) {
        const RatioReport r =
            foelner_ratios(sym_u(k, kTheta), WindowSpec{n, m});
        CHECK(r.r_comm_2 * r.r_comm_2 ==
              doctest::Approx(expected).epsilon(1e-12));
        CHECK(r.r_comm_2 == doctest::Approx(
                                foelner::regular_rep_commutator_ratio(k, n))
                                .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("fast path matches the dense matrix computation") {
  std::mt19937 gen(61);
  for (int trial = 0; trial < 12; ++trial) {
    const CrossedSymbol x = oracles::random_symbol(gen, kTheta, 2, 2);
    const WindowSpec w{3 + trial % 3, 2 + trial % 4};
    const RatioReport r = foelner_ratios(x, w);
    const auto dense = oracles::dense_window_norms(x, w);
    const double p2 = std::sqrt(static_cast<double>(w.dim()));
    const double p1 = static_cast<double>(w.dim());
    CHECK(r.r_comm_2 == doctest::Approx(dense.comm_2 / p2).epsilon(1e-10));
    CHECK(r.r_comm_1 == doctest::Approx(dense.comm_1 / p1).epsilon(1e-8));
    CHECK(r.r_corner_2 ==
          doctest::Approx(dense.corner_low_2 / p2).epsilon(1e-10));
    CHECK(r.r_corner_1 ==
          doctest::Approx(dense.corner_low_1 / p1).epsilon(1e-8));
    CHECK(r.qd_norm == doctest::Approx(dense.qd).epsilon(1e-8));
  }
}

TEST_CASE("Pythagoras split of the commutator") {
  std::mt19937 gen(67);
  for (int trial = 0; trial < 12; ++trial) {
    const CrossedSymbol x = oracles::random_symbol(gen, kTheta, 2, 2);
    const WindowSpec w{4, 3};
    const auto dense = oracles::dense_window_norms(x, w);
    CHECK(dense.comm_2 * dense.comm_2 ==
          doctest::Approx(dense.corner_low_2 * dense.corner_low_2 +
                          dense.corner_high_2 * dense.corner_high_2)
              .epsilon(1e-10));

    const CrossedSymbol h = x + adjoint(x);
    const auto hd = oracles::dense_window_norms(h, w);
    CHECK(hd.corner_low_2 == doctest::Approx(hd.corner_high_2).epsilon(1e-10));

    const RatioReport r = foelner_ratios(h, w);
    CHECK(r.r_comm_2 == doctest::Approx(std::sqrt(2.0) * r.r_corner_2)
                            .epsilon(1e-10));
  }
}

TEST_CASE("norm ordering") {
  std::mt19937 gen(71);
  for (int trial = 0; trial < 10; ++trial) {
    const CrossedSymbol x = oracles::random_symbol(gen, kTheta, 2, 2);
    const WindowSpec w{3, 3};
    const RatioReport r = foelner_ratios(x, w);
    const double d = static_cast<double>(w.dim());
    const double comm_2 = r.r_comm_2 * std::sqrt(d);
    const double comm_1 = r.r_comm_1 * d;
    CHECK(r.qd_norm <= comm_2 + 1e-10);
    CHECK(comm_2 <= comm_1 + 1e-10);
  }
}

TEST_CASE("almost Mathieu ratios vanish along the diagonal schedule") {
  const CrossedSymbol t = sym_almost_mathieu(1.0, kTheta);
  double prev = 1e300;
  for (long n : {4L, 8L, 16L, 32L}) {
    const RatioReport r = foelner_ratios(t, WindowSpec{n, n});
    CHECK(r.r_comm_2 < prev);
    CHECK(r.r_comm_2 * std::sqrt(static_cast<double>(n + 1)) < 10.0);
    prev = r.r_comm_2;
  }
}

TEST_CASE("compatibility condition") {
  const auto zero =
      compatibility_max_ratio(TrigPoly::constant(2.0), kTheta, WindowSpec{5, 6});
  CHECK(zero.max_ratio == 0.0);
  CHECK(zero.k0_ratio == 0.0);

  for (long m : {1L, 4L, 19L}) {
    const auto rep =
        compatibility_max_ratio(TrigPoly::cosine(), kTheta, WindowSpec{6, m});
    const double expected = 2.0 / std::sqrt(static_cast<double>(m + 1));
    CHECK(rep.max_ratio == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(rep.max_ratio - rep.k0_ratio) < 1e-12);
  }

  std::mt19937 gen(73);
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly g = oracles::random_trig_poly(gen, 5);
    const auto rep = compatibility_max_ratio(g, kTheta, WindowSpec{8, 10});
    CHECK(std::abs(rep.max_ratio - rep.k0_ratio) < 1e-12);
    // 1/sqrt(m+1) scaling once the window clears the bandwidth:
    // quadrupling m+1 halves the ratio.
    const long m0 = 10;
    const auto rep4 =
        compatibility_max_ratio(g, kTheta, WindowSpec{8, 4 * m0 + 3});
    CHECK(rep4.max_ratio == doctest::Approx(0.5 * rep.max_ratio).epsilon(1e-12));
  }
}

TEST_CASE("unilateral shift") {
  CHECK(foelner::shift_ratio(0) == 1.0);
  CHECK(foelner::shift_ratio(99) == doctest::Approx(0.1).epsilon(1e-15));
  for (long n : {0L, 1L, 7L, 40L}) {
    const RatioReport r = foelner::shift_report(n);
    CHECK(r.r_comm_2 == doctest::Approx(foelner::shift_ratio(n)).epsilon(1e-13));
    CHECK(r.qd_norm == doctest::Approx(1.0).epsilon(1e-12));
    // Squared HS norm of the commutator is exactly one boundary term.
    CHECK(r.r_comm_2 * r.r_comm_2 * static_cast<double>(n + 1) ==
          doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("shift powers") {
  CHECK(foelner::shift_power_ratio(5, 1) == foelner::shift_ratio(5));
  CHECK(foelner::shift_power_ratio(3, 2) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(foelner::shift_power_ratio(3, 4) == 1.0);
  CHECK(foelner::shift_power_ratio(3, 11) == 1.0);
  for (long k : {1L, 2L, 3L, 5L}) {
    for (long n : {0L, 2L, 6L}) {
      CHECK(foelner::shift_report(n, k).r_comm_2 ==
            doctest::Approx(foelner::shift_power_ratio(n, k)).epsilon(1e-13));
    }
  }
}

TEST_CASE("Cuntz isometry is not Foelner for P_2n") {
  CHECK(foelner::cuntz_ratio(1).first == 1.0);
  CHECK(foelner::cuntz_ratio(5).first == 5.0);
  CHECK(std::abs(foelner::cuntz_ratio(50).second - 0.5) < 0.006);
  for (long n : {1L, 4L, 12L}) {
    const RatioReport r = foelner::cuntz_report(n);
    const double comm_sq =
        r.r_comm_2 * r.r_comm_2 * static_cast<double>(2 * n + 1);
    CHECK(comm_sq == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
  }
}

TEST_CASE("band-limited corner norms stabilize") {
  const std::vector<WindowSpec> windows{{1, 1}, {2, 2}, {5, 5}, {9, 9}};
  const auto zeros =
      band_limited_check(CrossedSymbol::identity(kTheta), windows);
  for (double v : zeros) CHECK(v == 0.0);

  const auto vals = band_limited_check(sym_almost_mathieu(1.0, kTheta), windows);
  for (std::size_t i = 1; i < vals.size(); ++i) {
    // Constant per unit boundary length would grow; the full corner norm
    // grows like sqrt(window), so the normalized ratio still vanishes.
    const WindowSpec& w = windows[i];
    const double ratio = vals[i] / std::sqrt(static_cast<double>(w.dim()));
    const double prev_ratio =
        vals[i - 1] / std::sqrt(static_cast<double>(windows[i - 1].dim()));
    CHECK(ratio < prev_ratio);
  }
}
