#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "foelner/crossed.hpp"
#include "foelner/trig_poly.hpp"

namespace foelner {

// All ratios from one window: commutator and corner norms for p in {1, 2},
// normalized by ||R||_p, plus the operator norm of the commutator.
struct RatioReport {
  WindowSpec window;
  long dim = 0;  // rank of the projection R
  double r_comm_2 = 0.0;
  double r_comm_1 = 0.0;
  double r_corner_2 = 0.0;
  double r_corner_1 = 0.0;
  double qd_norm = 0.0;
};

// Følner ratios of a crossed-product symbol against R = P_n (x) Q_m.
// The symbol is realized on a window padded by (W, B) so every norm is the
// exact value for the infinite-dimensional operator.
RatioReport foelner_ratios(const CrossedSymbol& x, const WindowSpec& window);

// ||(1 - R) T R||_2 per window (unnormalized); bounded for banded symbols.
std::vector<double> band_limited_check(const CrossedSymbol& x,
                                       const std::vector<WindowSpec>& windows);

// max_{k in Gamma_n} ||[Q_m, alpha_{-k}(g)]||_2 / ||Q_m||_2 together with the
// k = 0 value; rotation invariance makes them equal.
struct CompatReport {
  double max_ratio = 0.0;
  double k0_ratio = 0.0;
};
CompatReport compatibility_max_ratio(const TrigPoly& g, double theta,
                                     const WindowSpec& window);

// Unilateral shift S on l^2(N_0) with P_n onto span{e_0..e_n}:
// ||[P_n, S]||_2 / ||P_n||_2 = 1 / sqrt(n + 1).
double shift_ratio(long n);

// ||[P_n, S^k]||_2 / ||P_n||_2 = sqrt(min(k, n + 1) / (n + 1)).
double shift_power_ratio(long n, long k);

// Cuntz isometry S_1 e_i = e_{2i} against P_{2n}:
// returns (||[P_{2n}, S_1]||_2^2, ratio^2) = (n, n / (2n + 1)).
std::pair<double, double> cuntz_ratio(long n);

// Full reports for the half-line examples, computed from the truncated
// matrices (brute-force route; the closed forms above are the other route).
RatioReport shift_report(long n, long k = 1);
RatioReport cuntz_report(long n);

namespace detail {

struct Entry {
  long row = 0;
  long col = 0;
  Complex val;
};

// Singular values (descending) of the matrix after dropping zero rows and
// columns, via the self-adjoint eigenproblem of the smaller Gram matrix.
std::vector<double> singular_values(const std::vector<Entry>& entries);

// Report from an explicit banded-operator entry list and a projection given
// as a membership test on indices. The entry list must contain every nonzero
// entry of the operator with at least one endpoint inside the projection.
RatioReport report_from_entries(const std::vector<Entry>& op,
                                const std::function<bool(long)>& in_range,
                                long rank, WindowSpec window);

}  // namespace detail

}  // namespace foelner
