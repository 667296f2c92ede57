#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "foelner/trig_poly.hpp"
#include "oracles.hpp"

using foelner::Complex;
using foelner::TrigPoly;

namespace {
const TrigPoly kZ = TrigPoly::monomial(1);
const TrigPoly kZinv = TrigPoly::monomial(-1);
}  // namespace

TEST_CASE("ring operations") {
  CHECK(approx_equal(kZ * kZinv, TrigPoly::constant(1.0), 1e-15));

  const Complex lambda(0.5, -1.25);
  CHECK(approx_equal(conj(lambda * kZ),
                     TrigPoly::monomial(-1, std::conj(lambda)), 1e-15));

  const TrigPoly cos2 = TrigPoly::cosine() * TrigPoly::cosine();
  CHECK(cos2.coeff(2) == Complex(1.0, 0.0));
  CHECK(cos2.coeff(0) == Complex(2.0, 0.0));
  CHECK(cos2.coeff(-2) == Complex(1.0, 0.0));
  CHECK(cos2.coeff(1) == Complex(0.0, 0.0));
}

TEST_CASE("conjugation is an involution, multiplication commutes") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigPoly g = oracles::random_trig_poly(gen, 5);
    const TrigPoly h = oracles::random_trig_poly(gen, 5);
    const TrigPoly f = oracles::random_trig_poly(gen, 5);
    CHECK(approx_equal(conj(conj(g)), g, 1e-15));
    CHECK(approx_equal(g * h, h * g, 1e-13));
    CHECK(approx_equal((g * h) * f, g * (h * f), 1e-12));
  }
}

TEST_CASE("rotation action") {
  const double theta = 0.31;
  std::mt19937 gen(7);
  const TrigPoly g = oracles::random_trig_poly(gen, 6);

  CHECK(approx_equal(rotate(g, 0, theta), g, 0.0));

  const TrigPoly rz = rotate(kZ, 1, theta);
  const double arg = 2.0 * std::numbers::pi * theta;
  CHECK(std::abs(rz.coeff(1) - Complex(std::cos(arg), std::sin(arg))) < 1e-15);

  for (long k : {-13L, 2L, 9L}) {
    CHECK(approx_equal(rotate(rotate(g, k, theta), -k, theta), g, 1e-15));
    CHECK(rotate(g, k, theta).bandwidth() == g.bandwidth());
    CHECK(rotate(g, k, theta).coeff_l2() ==
          doctest::Approx(g.coeff_l2()).epsilon(1e-14));
  }
}

TEST_CASE("multiplication-operator blocks") {
  const Eigen::MatrixXcd id = mult_block(TrigPoly::constant(1.0), 0, 2, 0, 2);
  CHECK((id - Eigen::MatrixXcd::Identity(3, 3)).norm() == 0.0);

  const Eigen::MatrixXcd mz = mult_block(kZ, 0, 2, 0, 2);
  for (long p = 0; p < 3; ++p) {
    for (long l = 0; l < 3; ++l) {
      CHECK(mz(p, l) == (p == l + 1 ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
    }
  }

  const Eigen::MatrixXcd band = mult_block(TrigPoly::cosine(), 3, 4, 0, 2);
  CHECK(band(0, 2) == Complex(1.0, 0.0));  // (p,l) = (3,2)
  CHECK(band.cwiseAbs().sum() == 1.0);     // everything else out of band
}

TEST_CASE("Q-commutator closed form") {
  CHECK(q_commutator_hs(TrigPoly::constant(4.5), 12) == 0.0);
  CHECK(q_commutator_hs(TrigPoly::cosine(), 1) == doctest::Approx(2.0));
  for (long m = 1; m <= 50; ++m) {
    CHECK(q_commutator_hs(TrigPoly::cosine(), m) ==
          doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("closed form vs dense block computation") {
  std::mt19937 gen(23);
  for (int trial = 0; trial < 25; ++trial) {
    const TrigPoly g = oracles::random_trig_poly(gen, 8);
    for (long m : {0L, 1L, 5L, 17L, 32L}) {
      CHECK(q_commutator_hs(g, m) ==
            doctest::Approx(oracles::q_commutator_by_matrix(g, m))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("Foelner property of Q_m for multiplication operators") {
  std::mt19937 gen(5);
  const TrigPoly g = oracles::random_trig_poly(gen, 4);
  const double stable = q_commutator_hs(g, g.bandwidth());
  for (long m = g.bandwidth(); m <= 200; m += 7) {
    CHECK(q_commutator_hs(g, m) == doctest::Approx(stable).epsilon(1e-14));
  }
  const double ratio_big =
      q_commutator_hs(g, 4000) / std::sqrt(4001.0);
  CHECK(ratio_big < 0.05 * std::max(1.0, stable));
}

TEST_CASE("rotation invariance of the Q-commutator") {
  const auto [a0, b0] = rotation_invariance_check(TrigPoly::cosine(), 0, 0.4, 3);
  CHECK(a0 == b0);

  const auto [a, b] = rotation_invariance_check(TrigPoly::cosine(), 7, 0.4, 3);
  CHECK(a == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(b == doctest::Approx(2.0).epsilon(1e-14));

  std::mt19937 gen(41);
  std::uniform_int_distribution<long> kdist(-20, 20);
  const double theta = 0.5669872981077806;  // surrogate for an irrational angle
  for (int trial = 0; trial < 40; ++trial) {
    const TrigPoly g = oracles::random_trig_poly(gen, 5);
    const long k = kdist(gen);
    const long m = trial % 9;
    const auto [lhs, rhs] = rotation_invariance_check(g, k, theta, m);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    CHECK(lhs == doctest::Approx(oracles::q_commutator_by_matrix(
                     rotate(g, -k, theta), m))
                     .epsilon(1e-12));
  }
}
