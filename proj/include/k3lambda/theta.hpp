#ifndef K3LAMBDA_THETA_HPP
#define K3LAMBDA_THETA_HPP

#include "k3lambda/permutation.hpp"
#include "k3lambda/series.hpp"

namespace k3 {

/// Bound on |u1|^2 + |u2|^2 in the genus-2 lattice sums.
struct LatticeBound {
  long value = 0;
  static LatticeBound adequate_for(const TruncationPolicy& pol);
};

/// One-variable Jacobi theta constants (kind 2, 3 or 4) as q-series with
/// exponent denominators dividing 4.
MultiSeries jacobi_theta(int kind, const TruncationPolicy& pol);

/// Genus-2 even theta constant for a characteristic, four variables
/// q1,q2,q3,q4, exponents in (1/2)Z.  The sum runs over shells of
/// |u1|^2 + |u2|^2 up to the bound, which must cover the policy.
MultiSeries genus2_theta(const ThetaChar& c, const TruncationPolicy& pol,
                         const LatticeBound& bound);
MultiSeries genus2_theta(int index, const TruncationPolicy& pol);

/// All ten squares Theta_1^2 .. Theta_10^2 (index 0 unused).
std::vector<MultiSeries> theta_squares(const TruncationPolicy& pol);

/// Weight-four combination: sqrt of (1/12)[(sum T^4)^2 - 4 sum T^8] with the
/// branch pinned by the leading term -64 q1 q2 (1/q4 - 1/q3 - q3 + q4).
MultiSeries theta_tilde(const TruncationPolicy& pol);

/// Rank over Q of the ten squared theta constants as coefficient vectors.
long theta_square_rank(const TruncationPolicy& pol);
long series_rank(const std::vector<MultiSeries>& list);

} // namespace k3

#endif
