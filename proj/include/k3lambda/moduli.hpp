#ifndef K3LAMBDA_MODULI_HPP
#define K3LAMBDA_MODULI_HPP

#include "k3lambda/gkz.hpp"
#include "k3lambda/permutation.hpp"

#include <random>

namespace k3 {

using ZPoint = std::array<Rat, 4>;
using Mat36 = std::array<std::array<Rat, 6>, 3>;

/// Affine semi-invariants P_s(z_1..z_4) in y_table() slot order.
const std::vector<Poly>& p_polynomials();
/// Their images Q_s in the flip chart (asserted polynomial).
const std::vector<Poly>& q_polynomials();

/// Representative 3x6 matrix (E_3 X) for a chart point, gauge
/// a0 = b0 = c0 = a1 = b1 = 1; throws on vanishing minors.
Mat36 matrix_from_z(const ZPoint& z);

Rat minor3(const Mat36& a, int c0, int c1, int c2);
/// Y_I(A) = [ijk][lmn] with the partition's sign semantics.
Rat y_value(const Mat36& a, const Partition& p);

/// Chart data read off A sigma = B (E_3 X): the coordinates and the factor
/// (det B)^2 a0 b0 c0 entering the twist.
struct ChartRead {
  ZPoint z;
  Rat denom;
};
ChartRead chart_read(const Mat36& a, const Perm6& sigma);

struct S6Action {
  ZPoint z_sigma;
  Rat twist;
};
/// Numeric S6 action in the distinguished chart: z^sigma and G(sigma,e).
S6Action s6_action_numeric(const Perm6& sigma, const ZPoint& z);

/// P_I(z) == G(sigma,e) P_{sigma^{-1}(I)}(z^sigma) for all ten I at a point.
CheckReport twist_identity_at(const Perm6& sigma, const ZPoint& z);

/// Exact polynomial identities P'_I = P_{alpha(I)} in the second chart,
/// alpha = (16)(24)(35).
CheckReport o2_alpha_check();

/// Closed forms of the three sample transformations; entry 0..2.
struct ClosedForm {
  Perm6 sigma;
  std::function<ZPoint(const ZPoint&)> z_map;
  std::function<Rat(const ZPoint&)> twist;
};
const std::vector<ClosedForm>& sample_closed_forms();

/// Uniform nonzero rationals for identity sampling, deterministic per seed.
struct RatSampler {
  std::mt19937 rng;
  explicit RatSampler(uint64_t seed) : rng(seed) {}
  Rat next() {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
    int n = 0;
    while (n == 0) n = num(rng);
    return rat(n, den(rng));
  }
  ZPoint point() { return {next(), next(), next(), next()}; }
};

} // namespace k3

#endif
