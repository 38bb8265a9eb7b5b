#ifndef K3LAMBDA_GKZ_HPP
#define K3LAMBDA_GKZ_HPP

#include "k3lambda/gammajet.hpp"
#include "k3lambda/logseries.hpp"

#include <string>
#include <vector>

namespace k3 {

enum class Scheme { o1, o1plus, yoshida };
enum class System { o1, o1plus, o2, o2plus, o3plus };

using NVec = std::array<long, 4>;
using Mat4 = std::array<std::array<Rat, 4>, 4>;

/// Coefficient rule c(n): product of Gamma factors over Gamma(1/2)^half_norm.
struct GKZScheme {
  Scheme tag;
  std::vector<GFactor> nums;
  std::vector<GFactor> dens;
  int half_norm = 3;

  bool on_support(const NVec& n) const;
  /// Degree-2 jet of c(n + rho) at rho = 0; exact, Gamma(1/2) cancelled.
  RhoJet jet(const NVec& n) const;
};

GKZScheme scheme(Scheme tag);

Rat gkz_coeff(const GKZScheme& s, const NVec& n);
/// lim d/d rho_i c(n + rho); gamma must cancel (throws otherwise).
Coefficient rho_derivative(const GKZScheme& s, const NVec& n, int i);
/// lim d2/d rho_i d rho_j c(n + rho); gamma must cancel.
Coefficient rho_derivative2(const GKZScheme& s, const NVec& n, int i, int j);

/// Nine operators, intersection pairing and its Gram witness.
struct PFSystem {
  System tag;
  Scheme coeffs;
  std::vector<PFOperator> ops; // nine
  Mat4 pairing;                // M with d = 2
  Mat4 gram_p;                 // unimodular witness (P resp. T-tilde)
  Mat4 gram_blocks;            // U(2) + <-2> + <-2>
};

PFSystem pf_system(System tag);

/// Monomial coordinate relations: z(other) in terms of z(base) and back.
struct CoordinateChange {
  std::array<std::array<int, 4>, 4> logmap; // theta_base_i = sum_j logmap[i][j] theta_other_j
  std::vector<SignedMonomial> base_in_other;
};
CoordinateChange coordinate_change(System from_base_to); // o2, o2plus, o3plus

struct FrobeniusBasis {
  MultiSeries w0;
  std::vector<LogSeries> w1; // four single-log solutions
  LogSeries w2;              // the double-log solution
  FrobeniusBasis(const TruncationPolicy& p) : w0(p), w2(p) {}
};

/// z-space basis through the policy cutoff (weights must be (1,1,1,1)).
FrobeniusBasis frobenius_basis(const PFSystem& sys, const TruncationPolicy& pol);

struct CheckFailure {
  std::string where;
  std::string detail;
};
struct CheckReport {
  bool pass = true;
  std::vector<CheckFailure> failures;
  void fail(std::string where, std::string detail) {
    pass = false;
    failures.push_back({std::move(where), std::move(detail)});
  }
};

/// Applies all nine operators to all six solutions; zero through degree N.
CheckReport verify_annihilation(const PFSystem& sys, const FrobeniusBasis& basis, long through);
/// (2 w2 + d varpi w0) w0 + sum M_ij w1_i w1_j == 0 through the degree.
CheckReport verify_quadratic_relation(const PFSystem& sys, const FrobeniusBasis& basis,
                                      const Rat& d, long through);
/// Transported operator sets match the stored base system up to scalars.
CheckReport verify_operator_transport(System which);

struct LaurentWitness {
  bool found = false;
  NVec at{0, 0, 0, 0};
  Rat value;
  bool o1_first_clean = true;   // no negative-exponent term for d/d rho_1 on side o1
  bool o1_weighted_clean = true; // ... for the M-weighted second derivative
  bool o1_unweighted_dirty = false; // some single d2 IS nonzero off-orthant
};
/// Appendix-style contrast: naive first derivative in the Yoshida chart is a
/// genuine Laurent series; the o1-side constructions stay in the orthant.
LaurentWitness yoshida_laurent_witness(long box);

} // namespace k3

#endif
