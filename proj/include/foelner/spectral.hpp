#pragma once

#include <vector>

#include "foelner/crossed.hpp"

namespace foelner {

// Empirical spectral measure of a compression: eigenvalues in ascending
// order, each carrying weight 1/dim.
struct SpectralMeasure {
  WindowSpec window;
  std::vector<double> eigenvalues;

  [[nodiscard]] long dim() const {
    return static_cast<long>(eigenvalues.size());
  }
};

// Eigenvalues (ascending) of a Hermitian matrix. The input is checked
// against its adjoint to hermitian_tol and symmetrized before solving;
// throws std::invalid_argument beyond the tolerance.
std::vector<double> eig_hermitian(const Eigen::MatrixXcd& m,
                                  double hermitian_tol = 1e-10);

// mu_T^n: eigenvalues of the compression R T R on the (unpadded) window.
// Throws std::invalid_argument unless the symbol is self-adjoint.
SpectralMeasure empirical_measure(const CrossedSymbol& x,
                                  const WindowSpec& window);

// (1/dim) sum_i lambda_i^k.
double empirical_moment(const SpectralMeasure& mu, long k);

// tau(X^k) through the symbol algebra; the k-th moment of mu_T.
double oracle_moment(const CrossedSymbol& x, long k);

struct MomentRow {
  WindowSpec window;
  long k = 0;
  double empirical = 0.0;
  double oracle = 0.0;
  double abs_error = 0.0;
};

std::vector<MomentRow> moment_convergence_table(
    const CrossedSymbol& x, long k_max, const std::vector<WindowSpec>& windows);

// Sup distance between the empirical CDFs, exact on the merged atom list.
double kolmogorov_distance(const SpectralMeasure& mu1,
                           const SpectralMeasure& mu2);

struct ButterflyRow {
  double theta = 0.0;
  double lambda = 0.0;
  long n = 0;
  long m = 0;
  long index = 0;
  double eigenvalue = 0.0;
};

// Spectra of the almost Mathieu compression over a theta grid. Jobs run on
// up to `threads` workers; rows come back sorted by (theta position, index)
// independent of scheduling.
std::vector<ButterflyRow> butterfly(const std::vector<double>& theta_list,
                                    double lambda, const WindowSpec& window,
                                    unsigned threads = 0);

}  // namespace foelner
