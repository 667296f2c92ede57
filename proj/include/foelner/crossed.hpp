#pragma once

#include <complex>
#include <map>

#include <Eigen/Dense>

#include "foelner/trig_poly.hpp"

namespace foelner {

// Window for the compression R = P_n (x) Q_m: group indices {-n..n},
// fiber frequencies {0..m}.
struct WindowSpec {
  long n = 0;
  long m = 0;

  [[nodiscard]] long group_size() const { return 2 * n + 1; }
  [[nodiscard]] long fiber_size() const { return m + 1; }
  [[nodiscard]] long dim() const { return group_size() * fiber_size(); }

  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

// Finitely supported symbol A: Z -> TrigPoly together with the rotation
// angle theta (in turns). Represents the crossed-product element whose
// group-indexed matrix has block (g', g) = alpha_{-g}(A(g' - g)).
class CrossedSymbol {
 public:
  using TermMap = std::map<long, TrigPoly>;

  explicit CrossedSymbol(double theta) : theta_(theta) {}
  CrossedSymbol(double theta, TermMap terms);

  static CrossedSymbol identity(double theta);

  [[nodiscard]] double theta() const { return theta_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] TrigPoly term(long s) const;

  [[nodiscard]] long group_bandwidth() const;
  [[nodiscard]] long fiber_bandwidth() const;

  // l1 bound sum_s sum_j |A_hat(s)(j)|, an upper bound for the operator norm.
  [[nodiscard]] double norm_l1_bound() const;

  friend CrossedSymbol operator+(const CrossedSymbol& x, const CrossedSymbol& y);

 private:
  double theta_;
  TermMap terms_;
};

// Generators: pi(g) has A(0) = g; U(k) has A(k) = 1.
CrossedSymbol sym_pi(const TrigPoly& g, double theta);
CrossedSymbol sym_u(long k, double theta);

// Almost Mathieu element U + U* + lambda (V + V*): A(1) = A(-1) = 1,
// A(0) = lambda (z + 1/z).
CrossedSymbol sym_almost_mathieu(double lambda, double theta);

// Twisted convolution: B(s) = sum_k alpha_{-k}(A_X(s - k)) A_Y(k).
// Throws std::invalid_argument if the angles differ.
CrossedSymbol mul(const CrossedSymbol& x, const CrossedSymbol& y);

// A*(s) = alpha_{-s}(conj(A(-s))).
CrossedSymbol adjoint(const CrossedSymbol& x);

bool is_selfadjoint(const CrossedSymbol& x, double tol = 1e-12);

// Canonical trace: the 0th Fourier coefficient of A(0).
Complex trace(const CrossedSymbol& x);

CrossedSymbol power(const CrossedSymbol& x, long k);

// Dense realization of a symbol on a rectangular index window
// {group g in [glo, ghi]} x {fiber p in [flo, fhi]}, group-major order.
// Entry ((g', p'), (g, p)) = A_hat(g' - g)(p' - p) e^{-2 pi i g theta (p' - p)}.
Eigen::MatrixXcd realize_block(const CrossedSymbol& x, long glo, long ghi,
                               long flo, long fhi);

struct CompressedOperator {
  WindowSpec window;
  Eigen::MatrixXcd entries;
};

// Compression R T R on the window itself (group {-n..n}, fiber {0..m}).
CompressedOperator realize(const CrossedSymbol& x, const WindowSpec& window);

}  // namespace foelner
