#pragma once

#include <complex>
#include <map>
#include <utility>

#include <Eigen/Dense>

namespace foelner {

using Complex = std::complex<double>;

// Trigonometric polynomial g(z) = sum_j g_hat(j) z^j with finite Fourier
// support. Coefficients below kPruneTol in modulus are dropped so supports
// stay finite under repeated multiplication.
class TrigPoly {
 public:
  static constexpr double kPruneTol = 1e-15;

  using CoeffMap = std::map<long, Complex>;

  TrigPoly() = default;
  explicit TrigPoly(CoeffMap coeffs);

  static TrigPoly constant(Complex c);
  static TrigPoly monomial(long freq, Complex c = Complex(1.0, 0.0));
  // 2 lambda cos(2 pi t) as a function on the circle: lambda (z + 1/z).
  static TrigPoly cosine(double scale = 1.0);

  [[nodiscard]] Complex coeff(long j) const;
  [[nodiscard]] const CoeffMap& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] long bandwidth() const;

  // l1 norm of the coefficients; an upper bound for the sup norm on the circle.
  [[nodiscard]] double coeff_l1() const;
  [[nodiscard]] double coeff_l2() const;

  friend TrigPoly operator+(const TrigPoly& g, const TrigPoly& h);
  friend TrigPoly operator-(const TrigPoly& g, const TrigPoly& h);
  friend TrigPoly operator*(const TrigPoly& g, const TrigPoly& h);
  friend TrigPoly operator*(Complex c, const TrigPoly& g);

  friend bool approx_equal(const TrigPoly& g, const TrigPoly& h, double tol);

 private:
  CoeffMap coeffs_;
};

// Complex conjugate on the circle: coefficient j becomes conj(g_hat(-j)).
TrigPoly conj(const TrigPoly& g);

// Rotation action alpha_k: g(z) -> g(e^{2 pi i k theta} z), i.e. the
// coefficient at frequency j picks up the phase e^{2 pi i k theta j}.
// theta is measured in turns.
TrigPoly rotate(const TrigPoly& g, long k, double theta);

// Matrix of multiplication by g in the basis {eps_k(z) = z^k}:
// entry (p, l) = g_hat(p - l) for p in [row_lo, row_hi], l in [col_lo, col_hi].
Eigen::MatrixXcd mult_block(const TrigPoly& g, long row_lo, long row_hi,
                            long col_lo, long col_hi);

// ||[Q_m, g]||_2 where Q_m projects L^2(T) onto span{eps_0, ..., eps_m}.
// Closed form: ||[Q_m, g]||_2^2 = 2 sum_{d>=1} min(d, m+1) (|g_hat(d)|^2 + |g_hat(-d)|^2).
double q_commutator_hs(const TrigPoly& g, long m);

// (||[Q_m, alpha_{-k}(g)]||_2, ||[Q_m, g]||_2); the two agree since the
// rotation phases are unimodular.
std::pair<double, double> rotation_invariance_check(const TrigPoly& g, long k,
                                                    double theta, long m);

}  // namespace foelner
