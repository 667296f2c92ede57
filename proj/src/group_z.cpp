#include "foelner/group_z.hpp"

#include <algorithm>
#include <cmath>

namespace foelner {

Rational symdiff_ratio(long k, long n) {
  const long card = 2 * n + 1;
  // The shifted window overlaps the original in card - |k| points (if any);
  // each non-overlapping point is counted once per set.
  const long overlap_loss = std::min(std::labs(k), card);
  return Rational(2 * overlap_loss, card);
}

double regular_rep_commutator_ratio(long k, long n) {
  return std::sqrt(symdiff_ratio(k, n).value());
}

}  // namespace foelner
