#include "foelner/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace foelner {

std::vector<double> eig_hermitian(const Eigen::MatrixXcd& m,
                                  double hermitian_tol) {
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > hermitian_tol) {
    std::ostringstream msg;
    msg << "eig_hermitian: matrix deviates from its adjoint by " << dev;
    throw std::invalid_argument(msg.str());
  }
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      sym, Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(),
                         solver.eigenvalues().data() +
                             solver.eigenvalues().size());
  std::sort(ev.begin(), ev.end());
  return ev;
}

SpectralMeasure empirical_measure(const CrossedSymbol& x,
                                  const WindowSpec& window) {
  if (!is_selfadjoint(x)) {
    throw std::invalid_argument("empirical_measure: symbol is not self-adjoint");
  }
  return SpectralMeasure{window, eig_hermitian(realize(x, window).entries)};
}

double empirical_moment(const SpectralMeasure& mu, long k) {
  double s = 0.0;
  for (double lam : mu.eigenvalues) s += std::pow(lam, static_cast<double>(k));
  return s / static_cast<double>(mu.dim());
}

double oracle_moment(const CrossedSymbol& x, long k) {
  if (!is_selfadjoint(x)) {
    throw std::invalid_argument("oracle_moment: symbol is not self-adjoint");
  }
  return trace(power(x, k)).real();
}

std::vector<MomentRow> moment_convergence_table(
    const CrossedSymbol& x, long k_max,
    const std::vector<WindowSpec>& windows) {
  std::vector<double> oracle(static_cast<std::size_t>(k_max) + 1);
  for (long k = 0; k <= k_max; ++k) oracle[k] = oracle_moment(x, k);

  std::vector<MomentRow> rows;
  for (const auto& w : windows) {
    const SpectralMeasure mu = empirical_measure(x, w);
    for (long k = 0; k <= k_max; ++k) {
      const double emp = empirical_moment(mu, k);
      rows.push_back({w, k, emp, oracle[k], std::abs(emp - oracle[k])});
    }
  }
  return rows;
}

double kolmogorov_distance(const SpectralMeasure& mu1,
                           const SpectralMeasure& mu2) {
  const auto& a = mu1.eigenvalues;
  const auto& b = mu2.eigenvalues;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double dist = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    // Advance past all atoms at the next common evaluation point.
    double x;
    if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
      x = a[i];
    } else {
      x = b[j];
    }
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    dist = std::max(dist, std::abs(static_cast<double>(i) / na -
                                   static_cast<double>(j) / nb));
  }
  return dist;
}

std::vector<ButterflyRow> butterfly(const std::vector<double>& theta_list,
                                    double lambda, const WindowSpec& window,
                                    unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads,
                               std::max<std::size_t>(theta_list.size(), 1));

  std::vector<SpectralMeasure> measures(theta_list.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= theta_list.size()) return;
      measures[i] =
          empirical_measure(sym_almost_mathieu(lambda, theta_list[i]), window);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<ButterflyRow> rows;
  rows.reserve(theta_list.size() * static_cast<std::size_t>(window.dim()));
  for (std::size_t i = 0; i < theta_list.size(); ++i) {
    const auto& ev = measures[i].eigenvalues;
    for (long idx = 0; idx < static_cast<long>(ev.size()); ++idx) {
      rows.push_back({theta_list[i], lambda, window.n, window.m, idx,
                      ev[static_cast<std::size_t>(idx)]});
    }
  }
  return rows;
}

}  // namespace foelner
