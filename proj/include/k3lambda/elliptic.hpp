#ifndef K3LAMBDA_ELLIPTIC_HPP
#define K3LAMBDA_ELLIPTIC_HPP

#include "k3lambda/gkz.hpp"
#include "k3lambda/theta.hpp"

namespace k3 {

/// Holomorphic solution and its single-log partner for the one-parameter
/// family; w1 carries the log through L_1 (the 2/(2 pi i) prefactor is kept
/// outside the ring and cancels in every identity verified here).
struct EllipticSolutionPair {
  MultiSeries w0;
  LogSeries w1;
  EllipticSolutionPair(const TruncationPolicy& p) : w0(p), w1(p) {}
};

/// One-variable coefficient rule Gamma(n+1/2)^2 / (Gamma(1/2)^2 Gamma(n+1)^2).
GKZScheme elliptic_scheme();

EllipticSolutionPair ell_solutions(const TruncationPolicy& pol);

/// theta_z^2 + z (theta_z + 1/2)^2.
PFOperator elliptic_pf_operator();

/// The inverse series z(q) = 16 q - 128 q^2 + ... of q = exp(pi i w1/w0).
MultiSeries ell_lambda_series(long N);

struct EllReport {
  CheckReport checks;
  std::string cn_denominator_note;
};
/// Mirror map against theta quotients, the square identity and the three
/// affine relations, exactly through q^N.
EllReport ell_lambda_identity(long N);

/// Chart-change tables: semi-invariant twist identities as rational-function
/// identities, the anti-homomorphism law, and the twisted annihilation check.
CheckReport ell_s3_tables(long N = 8);

} // namespace k3

#endif
