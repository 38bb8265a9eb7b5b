#include <doctest.h>

#include "k3lambda/theta.hpp"

using namespace k3;

namespace {
TruncationPolicy theta_pol(long n, long w) {
  return TruncationPolicy::weighted(4, {1, 1, 0, 0}, n, w);
}
} // namespace

TEST_CASE("jacobi theta expansions against the lattice sums") {
  TruncationPolicy p = TruncationPolicy::total(1, 4);
  MultiSeries t3 = jacobi_theta(3, p);
  CHECK(t3.coeff(Exp{}).rational_part() == 1);
  CHECK(t3.coeff(Exp::from_ints({1})).rational_part() == 2);
  CHECK(t3.coeff(Exp::from_ints({2})).is_zero());
  CHECK(t3.coeff(Exp::from_ints({4})).rational_part() == 2);

  MultiSeries t4 = jacobi_theta(4, p);
  CHECK(t4.coeff(Exp::from_ints({1})).rational_part() == -2);
  CHECK(t4.coeff(Exp::from_ints({4})).rational_part() == 2);

  MultiSeries t2 = jacobi_theta(2, p);
  Exp quarter;
  quarter.q[0] = 1;
  CHECK(t2.coeff(quarter).rational_part() == 2);

  // theta2^4 + theta4^4 - theta3^4 == 0
  auto pow4 = [](const MultiSeries& s) {
    MultiSeries s2 = s * s;
    return s2 * s2;
  };
  CHECK((pow4(t2) + pow4(t4) - pow4(t3)).is_zero());
}

TEST_CASE("characteristic table invariants") {
  const auto& tab = theta_table();
  CHECK(tab.size() == 10);
  for (const auto& tc : tab) {
    CHECK(theta_index_of(tc.part) == tc.index);
    // block 1 contains the label 1 and both blocks are sorted
    CHECK(tc.part.b1[0] == 0);
    CHECK(tc.part.b1[1] < tc.part.b1[2]);
    CHECK(tc.part.b2[0] < tc.part.b2[1]);
  }
}

TEST_CASE("genus-2 theta leading terms") {
  TruncationPolicy p = theta_pol(2, 2);
  MultiSeries t6 = genus2_theta(6, p);
  CHECK(t6.constant_term().rational_part() == 1);
  CHECK(t6.coeff(Exp::from_ints({1, 0, 0, 0})).rational_part() == 4);
  CHECK(t6.coeff(Exp::from_ints({0, 1, 0, 0})).rational_part() == 4);

  MultiSeries t9 = genus2_theta(9, p);
  CHECK(t9.constant_term().rational_part() == 1);
  CHECK(t9.coeff(Exp::from_ints({1, 0, 0, 0})).rational_part() == -4);
  CHECK(t9.coeff(Exp::from_ints({0, 1, 0, 0})).rational_part() == 4);

  MultiSeries t3 = genus2_theta(3, p);
  CHECK(t3.constant_term().is_zero());
  Exp half;
  half.q[0] = 2; // q1^(1/2)
  CHECK(t3.coeff(half).rational_part() == 4);

  // constant terms are 1 exactly when s1 = s2 = 0
  for (const auto& tc : theta_table()) {
    MultiSeries t = genus2_theta(tc, p, LatticeBound::adequate_for(p));
    bool expect_one = tc.s[0] == 0 && tc.s[1] == 0;
    CHECK(t.constant_term().rational_part() == (expect_one ? 1 : 0));
    // integral coefficients, and integer exponents after squaring
    for (const auto& [e, c] : t.terms()) {
      CHECK(is_integer(c.rational_part()));
      CHECK(e.q[0] % 2 == 0);
    }
    MultiSeries tsq = t * t;
    for (const auto& [e, c] : tsq.terms())
      for (int i = 0; i < 4; ++i) CHECK(e.q[i] % 4 == 0);
  }
}

TEST_CASE("raising the lattice bound never changes reported coefficients") {
  TruncationPolicy p = theta_pol(2, 2);
  for (int idx : {1, 3, 6, 8}) {
    MultiSeries a = genus2_theta(theta_table()[idx - 1], p, LatticeBound{3});
    MultiSeries b = genus2_theta(theta_table()[idx - 1], p, LatticeBound{7});
    CHECK(a == b);
  }
}

TEST_CASE("theta square rank") {
  CHECK(theta_square_rank(theta_pol(2, 2)) == 5);
  std::vector<MultiSeries> pairset;
  TruncationPolicy p = theta_pol(2, 2);
  MultiSeries t6 = genus2_theta(6, p), t9 = genus2_theta(9, p);
  pairset.push_back(t6 * t6);
  pairset.push_back(t9 * t9);
  CHECK(series_rank(pairset) == 2);
  pairset.pop_back();
  CHECK(series_rank(pairset) == 1);
}

TEST_CASE("theta_tilde leading term and antisymmetry") {
  TruncationPolicy p = theta_pol(3, 3);
  MultiSeries tt = theta_tilde(p);
  // -64 q1 q2 (1/q4 - 1/q3 - q3 + q4)
  CHECK(tt.coeff(Exp::from_ints({1, 1, 0, -1})).rational_part() == -64);
  CHECK(tt.coeff(Exp::from_ints({1, 1, -1, 0})).rational_part() == 64);
  CHECK(tt.coeff(Exp::from_ints({1, 1, 1, 0})).rational_part() == 64);
  CHECK(tt.coeff(Exp::from_ints({1, 1, 0, 1})).rational_part() == -64);
  // weight-2 part has nothing else
  long weight2 = 0;
  for (const auto& [e, c] : tt.terms())
    if (e.q[0] + e.q[1] <= 8) ++weight2;
  CHECK(weight2 == 4);

  // swapping q3 and q4 flips the sign
  std::vector<SignedMonomial> swap34 = {{1, Exp::from_ints({1, 0, 0, 0})},
                                        {1, Exp::from_ints({0, 1, 0, 0})},
                                        {1, Exp::from_ints({0, 0, 0, 1})},
                                        {1, Exp::from_ints({0, 0, 1, 0})}};
  MultiSeries swapped = tt.substitute_monomials(swap34, p);
  CHECK(swapped == -tt);

  // defining property on the computed box
  for (const auto& [e, c] : tt.terms()) {
    CHECK(std::abs(e.q[2]) <= e.q[0] + e.q[1]);
    CHECK(std::abs(e.q[3]) <= e.q[0] + e.q[1]);
  }
}
