#ifndef K3LAMBDA_LAMBDA_HPP
#define K3LAMBDA_LAMBDA_HPP

#include "k3lambda/gkz.hpp"
#include "k3lambda/permutation.hpp"
#include "k3lambda/theta.hpp"

namespace k3 {

enum class Side { o1, o1plus };

/// Mirror map of one boundary chart: the coordinates as exact q-series,
/// their leading normalizations, and the monomial dictionary from the
/// exponentiated periods to the theta variables.
struct MirrorMap {
  Side side = Side::o1;
  TruncationPolicy qpol;      // q-ring: weight cutoff and graded functional
  TruncationPolicy zpol;      // z-ring used for the period series
  std::array<SignedMonomial, 4> Q_of_q;
  std::array<Rat, 4> lead_constants{Rat(0), Rat(0), Rat(0), Rat(0)};
  std::array<int, 4> sign_choice{1, 1, 1, 1}; // the flip-side branch signs
  std::vector<MultiSeries> z_q;               // coordinates as q-series
  MultiSeries w0_z;                            // holomorphic solution in z
  MultiSeries w0_q;                            // composed with the map
  MultiSeries w0sq_q;                          // its square

  MirrorMap(const TruncationPolicy& qp, const TruncationPolicy& zp)
      : qpol(qp), zpol(zp), w0_z(zp), w0_q(qp), w0sq_q(qp) {}
};

/// q-ring policy of a side: weight (1,1,0,0) cutoff N plus the pulled-back
/// total-degree functional that keeps every operation exact on the
/// (N, W) report box.
TruncationPolicy side_q_policy(Side side, long N, long W);

MirrorMap build_mirror_map(Side side, long N, long W);

/// w0(z(q)); stored inside the map by build_mirror_map as well.
MultiSeries omega0_of_q(const MirrorMap& map);

struct MasterReport {
  Perm6 used;
  std::array<bool, 10> slot_pass{};
  bool pass = false;
  std::string first_mismatch; // partition and exponent
  long cutoff = 0;
};

/// P_I(z(q)) w0^2 against the squared theta constants relabeled by sigma.
MasterReport verify_master_equation(const MirrorMap& map, const Perm6& sigma,
                                    const std::vector<MultiSeries>& theta_sq);

/// All 720 relabelings at a small cutoff; expected a singleton.
std::vector<Perm6> permutation_search(const MirrorMap& map,
                                      const std::vector<MultiSeries>& theta_sq, long cutoff,
                                      bool swap_q34 = false);

/// Denominator-cleared theta expressions for the coordinates, the closed
/// form of w0^2, the quadratic it satisfies, and the discriminant identity.
CheckReport lambda_theta_identities(const MirrorMap& map);

/// Pure-theta discriminant identity T^2 - 4 T6 T7 T8 T9 == theta_tilde^2,
/// checked on its own policy (no mirror map needed).
CheckReport theta_discriminant_identity(long N);

/// Round trip Q_k = z_k exp(sigma_k/w0) recovered from the map.
CheckReport mirror_roundtrip(const MirrorMap& map);

/// 2 w2/w0 + 2 varpi + [transported pairing](L+s) == 0 in the z-ring.
CheckReport tcoordinate_quadratic(Side side, long N);

/// The exponent dictionary equals the unimodular transport of the period
/// lattice followed by the single branch shift.
bool branch_shift_consistent();

std::vector<MultiSeries> side_theta_squares(const MirrorMap& map);

} // namespace k3

#endif
