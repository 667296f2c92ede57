#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>

namespace foelner {

// Reduced non-negative fraction. Følner ratios on integer windows are
// exact rationals; floating point enters only when the caller asks for it.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  [[nodiscard]] double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

// The Følner window Gamma_n = {-n, ..., n} of the group Z.
struct GroupWindow {
  long n = 0;

  [[nodiscard]] long cardinality() const { return 2 * n + 1; }
  [[nodiscard]] bool contains(long j) const { return std::labs(j) <= n; }
};

// |(k + Gamma_n) symdiff Gamma_n| / |Gamma_n|, exactly.
Rational symdiff_ratio(long k, long n);

// ||[P_n, U(k)]||_2 / ||P_n||_2 for the regular representation on l^2(Z);
// the square of this ratio equals symdiff_ratio(k, n).
double regular_rep_commutator_ratio(long k, long n);

}  // namespace foelner
