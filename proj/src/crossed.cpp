#include "foelner/crossed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace foelner {

CrossedSymbol::CrossedSymbol(double theta, TermMap terms)
    : theta_(theta), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

CrossedSymbol CrossedSymbol::identity(double theta) {
  return CrossedSymbol(theta, {{0, TrigPoly::constant(1.0)}});
}

TrigPoly CrossedSymbol::term(long s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? TrigPoly() : it->second;
}

long CrossedSymbol::group_bandwidth() const {
  long w = 0;
  for (const auto& [s, g] : terms_) w = std::max(w, std::labs(s));
  return w;
}

long CrossedSymbol::fiber_bandwidth() const {
  long b = 0;
  for (const auto& [s, g] : terms_) b = std::max(b, g.bandwidth());
  return b;
}

double CrossedSymbol::norm_l1_bound() const {
  double s = 0.0;
  for (const auto& [k, g] : terms_) s += g.coeff_l1();
  return s;
}

CrossedSymbol operator+(const CrossedSymbol& x, const CrossedSymbol& y) {
  if (x.theta_ != y.theta_) {
    throw std::invalid_argument("CrossedSymbol sum: mismatched rotation angles");
  }
  CrossedSymbol::TermMap out = x.terms_;
  for (const auto& [s, g] : y.terms_) {
    auto it = out.find(s);
    if (it == out.end()) {
      out.emplace(s, g);
    } else {
      it->second = it->second + g;
    }
  }
  return CrossedSymbol(x.theta_, std::move(out));
}

CrossedSymbol sym_pi(const TrigPoly& g, double theta) {
  return CrossedSymbol(theta, {{0, g}});
}

CrossedSymbol sym_u(long k, double theta) {
  return CrossedSymbol(theta, {{k, TrigPoly::constant(1.0)}});
}

CrossedSymbol sym_almost_mathieu(double lambda, double theta) {
  return CrossedSymbol(theta, {{-1, TrigPoly::constant(1.0)},
                               {0, TrigPoly::cosine(lambda)},
                               {1, TrigPoly::constant(1.0)}});
}

CrossedSymbol mul(const CrossedSymbol& x, const CrossedSymbol& y) {
  if (x.theta() != y.theta()) {
    throw std::invalid_argument(
        "CrossedSymbol mul: mismatched rotation angles");
  }
  const double theta = x.theta();
  CrossedSymbol::TermMap out;
  for (const auto& [sx, ax] : x.terms()) {
    for (const auto& [k, ak] : y.terms()) {
      const long s = sx + k;
      const TrigPoly piece = rotate(ax, -k, theta) * ak;
      auto it = out.find(s);
      if (it == out.end()) {
        out.emplace(s, piece);
      } else {
        it->second = it->second + piece;
      }
    }
  }
  return CrossedSymbol(theta, std::move(out));
}

CrossedSymbol adjoint(const CrossedSymbol& x) {
  CrossedSymbol::TermMap out;
  for (const auto& [s, g] : x.terms()) {
    out[-s] = rotate(conj(g), s, x.theta());
  }
  return CrossedSymbol(x.theta(), std::move(out));
}

bool is_selfadjoint(const CrossedSymbol& x, double tol) {
  const CrossedSymbol a = adjoint(x);
  for (const auto& [s, g] : x.terms()) {
    if (!approx_equal(g, a.term(s), tol)) return false;
  }
  for (const auto& [s, g] : a.terms()) {
    if (!approx_equal(g, x.term(s), tol)) return false;
  }
  return true;
}

Complex trace(const CrossedSymbol& x) { return x.term(0).coeff(0); }

CrossedSymbol power(const CrossedSymbol& x, long k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  CrossedSymbol acc = CrossedSymbol::identity(x.theta());
  for (long i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

Eigen::MatrixXcd realize_block(const CrossedSymbol& x, long glo, long ghi,
                               long flo, long fhi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const long gs = ghi - glo + 1;
  const long fs = fhi - flo + 1;
  const double theta = x.theta();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(gs * fs, gs * fs);
  const auto idx = [&](long g, long p) { return (g - glo) * fs + (p - flo); };
  for (const auto& [s, a] : x.terms()) {
    for (long g = glo; g <= ghi; ++g) {
      const long gp = g + s;
      if (gp < glo || gp > ghi) continue;
      for (const auto& [j, c] : a.coeffs()) {
        // alpha_{-g} multiplies the coefficient at frequency j by
        // e^{-2 pi i g theta j}.
        const double arg =
            -two_pi * static_cast<double>(g) * theta * static_cast<double>(j);
        const Complex v = c * Complex(std::cos(arg), std::sin(arg));
        for (long p = flo; p <= fhi; ++p) {
          const long pp = p + j;
          if (pp < flo || pp > fhi) continue;
          out(idx(gp, pp), idx(g, p)) += v;
        }
      }
    }
  }
  return out;
}

CompressedOperator realize(const CrossedSymbol& x, const WindowSpec& window) {
  return CompressedOperator{
      window, realize_block(x, -window.n, window.n, 0, window.m)};
}

}  // namespace foelner
