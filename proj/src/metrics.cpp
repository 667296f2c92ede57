#include "foelner/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>

namespace foelner {

namespace detail {

std::vector<double> singular_values(const std::vector<Entry>& entries) {
  if (entries.empty()) return {};
  std::map<long, long> rows, cols;
  for (const auto& e : entries) {
    rows.emplace(e.row, 0);
    cols.emplace(e.col, 0);
  }
  long i = 0;
  for (auto& [r, pos] : rows) pos = i++;
  i = 0;
  for (auto& [c, pos] : cols) pos = i++;

  Eigen::MatrixXcd m =
      Eigen::MatrixXcd::Zero(static_cast<long>(rows.size()),
                             static_cast<long>(cols.size()));
  for (const auto& e : entries) m(rows.at(e.row), cols.at(e.col)) += e.val;

  const Eigen::MatrixXcd gram = (m.rows() <= m.cols())
                                    ? Eigen::MatrixXcd(m * m.adjoint())
                                    : Eigen::MatrixXcd(m.adjoint() * m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      gram, Eigen::EigenvaluesOnly);
  std::vector<double> sv;
  sv.reserve(static_cast<std::size_t>(solver.eigenvalues().size()));
  for (long j = solver.eigenvalues().size() - 1; j >= 0; --j) {
    sv.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(j))));
  }
  return sv;
}

RatioReport report_from_entries(const std::vector<Entry>& op,
                                const std::function<bool(long)>& in_range,
                                long rank, WindowSpec window) {
  std::vector<Entry> comm;
  double comm_sq = 0.0;
  double corner_low_sq = 0.0;   // (1 - R) T R
  double corner_high_sq = 0.0;  // R T (1 - R)
  std::vector<Entry> corner_low;
  for (const auto& e : op) {
    const bool in_r = in_range(e.row);
    const bool in_c = in_range(e.col);
    if (in_r == in_c) continue;
    const double sq = std::norm(e.val);
    comm_sq += sq;
    if (in_c) {
      corner_low_sq += sq;
      corner_low.push_back(e);
      comm.push_back({e.row, e.col, -e.val});  // (R T - T R) loses T R here
    } else {
      corner_high_sq += sq;
      comm.push_back(e);
    }
  }

  const auto comm_sv = singular_values(comm);
  const auto corner_sv = singular_values(corner_low);
  double comm_1 = 0.0;
  for (double s : comm_sv) comm_1 += s;
  double corner_1 = 0.0;
  for (double s : corner_sv) corner_1 += s;

  const double p2 = std::sqrt(static_cast<double>(rank));
  const double p1 = static_cast<double>(rank);
  RatioReport rep;
  rep.window = window;
  rep.dim = rank;
  rep.r_comm_2 = std::sqrt(comm_sq) / p2;
  rep.r_comm_1 = comm_1 / p1;
  rep.r_corner_2 = std::sqrt(corner_low_sq) / p2;
  rep.r_corner_1 = corner_1 / p1;
  rep.qd_norm = comm_sv.empty() ? 0.0 : comm_sv.front();
  return rep;
}

namespace {

// Nonzero entries of the realization of x on the padded window
// group [-n-W, n+W] x fiber [-B, m+B], as flat group-major indices.
std::vector<Entry> crossed_entries(const CrossedSymbol& x,
                                   const WindowSpec& w) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const long wpad = x.group_bandwidth();
  const long bpad = x.fiber_bandwidth();
  const long glo = -w.n - wpad, ghi = w.n + wpad;
  const long flo = -bpad, fhi = w.m + bpad;
  const long fs = fhi - flo + 1;
  const auto idx = [&](long g, long p) { return (g - glo) * fs + (p - flo); };

  std::vector<Entry> out;
  for (const auto& [s, a] : x.terms()) {
    for (const auto& [j, c] : a.coeffs()) {
      for (long g = glo; g <= ghi; ++g) {
        const long gp = g + s;
        if (gp < glo || gp > ghi) continue;
        const double arg =
            -two_pi * static_cast<double>(g) * x.theta() * static_cast<double>(j);
        const Complex v = c * Complex(std::cos(arg), std::sin(arg));
        for (long p = flo; p <= fhi; ++p) {
          const long pp = p + j;
          if (pp < flo || pp > fhi) continue;
          out.push_back({idx(gp, pp), idx(g, p), v});
        }
      }
    }
  }
  return out;
}

std::function<bool(long)> crossed_membership(const CrossedSymbol& x,
                                             const WindowSpec& w) {
  const long bpad = x.fiber_bandwidth();
  const long flo = -bpad, fhi = w.m + bpad;
  const long fs = fhi - flo + 1;
  const long glo = -w.n - x.group_bandwidth();
  return [=](long flat) {
    const long g = glo + flat / fs;
    const long p = flo + flat % fs;
    return std::labs(g) <= w.n && p >= 0 && p <= w.m;
  };
}

}  // namespace

}  // namespace detail

RatioReport foelner_ratios(const CrossedSymbol& x, const WindowSpec& window) {
  return detail::report_from_entries(detail::crossed_entries(x, window),
                                     detail::crossed_membership(x, window),
                                     window.dim(), window);
}

std::vector<double> band_limited_check(const CrossedSymbol& x,
                                       const std::vector<WindowSpec>& windows) {
  std::vector<double> out;
  out.reserve(windows.size());
  for (const auto& w : windows) {
    const auto entries = detail::crossed_entries(x, w);
    const auto in_range = detail::crossed_membership(x, w);
    double sq = 0.0;
    for (const auto& e : entries) {
      if (in_range(e.col) && !in_range(e.row)) sq += std::norm(e.val);
    }
    out.push_back(std::sqrt(sq));
  }
  return out;
}

CompatReport compatibility_max_ratio(const TrigPoly& g, double theta,
                                     const WindowSpec& window) {
  const double qnorm = std::sqrt(static_cast<double>(window.m + 1));
  CompatReport rep;
  rep.k0_ratio = q_commutator_hs(g, window.m) / qnorm;
  for (long k = -window.n; k <= window.n; ++k) {
    rep.max_ratio = std::max(
        rep.max_ratio, q_commutator_hs(rotate(g, -k, theta), window.m) / qnorm);
  }
  return rep;
}

double shift_ratio(long n) { return shift_power_ratio(n, 1); }

double shift_power_ratio(long n, long k) {
  return std::sqrt(static_cast<double>(std::min(k, n + 1)) /
                   static_cast<double>(n + 1));
}

std::pair<double, double> cuntz_ratio(long n) {
  return {static_cast<double>(n),
          static_cast<double>(n) / static_cast<double>(2 * n + 1)};
}

RatioReport shift_report(long n, long k) {
  std::vector<detail::Entry> op;
  for (long i = 0; i <= n + k; ++i) op.push_back({i + k, i, Complex(1.0, 0.0)});
  return detail::report_from_entries(
      op, [n](long i) { return i <= n; }, n + 1, WindowSpec{n, 0});
}

RatioReport cuntz_report(long n) {
  std::vector<detail::Entry> op;
  for (long i = 0; i <= 2 * n + 1; ++i) op.push_back({2 * i, i, Complex(1.0, 0.0)});
  return detail::report_from_entries(
      op, [n](long i) { return i <= 2 * n; }, 2 * n + 1, WindowSpec{n, 0});
}

}  // namespace foelner
