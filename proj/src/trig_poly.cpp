#include "foelner/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace foelner {

namespace {

void prune(TrigPoly::CoeffMap& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (std::abs(it->second) < TrigPoly::kPruneTol) {
      it = m.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

TrigPoly::TrigPoly(CoeffMap coeffs) : coeffs_(std::move(coeffs)) {
  prune(coeffs_);
}

TrigPoly TrigPoly::constant(Complex c) {
  return TrigPoly(CoeffMap{{0, c}});
}

TrigPoly TrigPoly::monomial(long freq, Complex c) {
  return TrigPoly(CoeffMap{{freq, c}});
}

TrigPoly TrigPoly::cosine(double scale) {
  return TrigPoly(CoeffMap{{-1, Complex(scale, 0.0)}, {1, Complex(scale, 0.0)}});
}

Complex TrigPoly::coeff(long j) const {
  const auto it = coeffs_.find(j);
  return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

long TrigPoly::bandwidth() const {
  long b = 0;
  for (const auto& [j, c] : coeffs_) b = std::max(b, std::labs(j));
  return b;
}

double TrigPoly::coeff_l1() const {
  double s = 0.0;
  for (const auto& [j, c] : coeffs_) s += std::abs(c);
  return s;
}

double TrigPoly::coeff_l2() const {
  double s = 0.0;
  for (const auto& [j, c] : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

TrigPoly operator+(const TrigPoly& g, const TrigPoly& h) {
  TrigPoly::CoeffMap out = g.coeffs_;
  for (const auto& [j, c] : h.coeffs_) out[j] += c;
  return TrigPoly(std::move(out));
}

TrigPoly operator-(const TrigPoly& g, const TrigPoly& h) {
  TrigPoly::CoeffMap out = g.coeffs_;
  for (const auto& [j, c] : h.coeffs_) out[j] -= c;
  return TrigPoly(std::move(out));
}

TrigPoly operator*(const TrigPoly& g, const TrigPoly& h) {
  TrigPoly::CoeffMap out;
  for (const auto& [j, c] : g.coeffs_) {
    for (const auto& [l, d] : h.coeffs_) {
      out[j + l] += c * d;
    }
  }
  return TrigPoly(std::move(out));
}

TrigPoly operator*(Complex c, const TrigPoly& g) {
  TrigPoly::CoeffMap out;
  for (const auto& [j, d] : g.coeffs_) out[j] = c * d;
  return TrigPoly(std::move(out));
}

bool approx_equal(const TrigPoly& g, const TrigPoly& h, double tol) {
  for (const auto& [j, c] : g.coeffs_) {
    if (std::abs(c - h.coeff(j)) > tol) return false;
  }
  for (const auto& [j, c] : h.coeffs_) {
    if (std::abs(c - g.coeff(j)) > tol) return false;
  }
  return true;
}

TrigPoly conj(const TrigPoly& g) {
  TrigPoly::CoeffMap out;
  for (const auto& [j, c] : g.coeffs()) out[-j] = std::conj(c);
  return TrigPoly(std::move(out));
}

TrigPoly rotate(const TrigPoly& g, long k, double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  TrigPoly::CoeffMap out;
  for (const auto& [j, c] : g.coeffs()) {
    const double arg = two_pi * static_cast<double>(k) * theta *
                       static_cast<double>(j);
    out[j] = c * Complex(std::cos(arg), std::sin(arg));
  }
  return TrigPoly(std::move(out));
}

Eigen::MatrixXcd mult_block(const TrigPoly& g, long row_lo, long row_hi,
                            long col_lo, long col_hi) {
  const long rows = row_hi - row_lo + 1;
  const long cols = col_hi - col_lo + 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rows, cols);
  for (long p = row_lo; p <= row_hi; ++p) {
    for (long l = col_lo; l <= col_hi; ++l) {
      out(p - row_lo, l - col_lo) = g.coeff(p - l);
    }
  }
  return out;
}

double q_commutator_hs(const TrigPoly& g, long m) {
  double sq = 0.0;
  for (const auto& [j, c] : g.coeffs()) {
    const long d = std::labs(j);
    if (d == 0) continue;
    sq += 2.0 * static_cast<double>(std::min(d, m + 1)) * std::norm(c);
  }
  return std::sqrt(sq);
}

std::pair<double, double> rotation_invariance_check(const TrigPoly& g, long k,
                                                    double theta, long m) {
  return {q_commutator_hs(rotate(g, -k, theta), m), q_commutator_hs(g, m)};
}

}  // namespace foelner
