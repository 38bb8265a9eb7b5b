#include <doctest.h>

#include "k3lambda/elliptic.hpp"

using namespace k3;

TEST_CASE("holomorphic solution coefficients") {
  TruncationPolicy pol = TruncationPolicy::total(1, 6);
  EllipticSolutionPair sols = ell_solutions(pol);
  CHECK(sols.w0.coeff(Exp::from_ints({0})).rational_part() == 1);
  CHECK(sols.w0.coeff(Exp::from_ints({1})).rational_part() == rat(1, 4));
  CHECK(sols.w0.coeff(Exp::from_ints({2})).rational_part() == rat(9, 64));
  CHECK(sols.w0.all_coeffs_rational());
  CHECK(sols.w1.log_degree() == 1);

  // the operator annihilates both solutions
  PFOperator dz = elliptic_pf_operator();
  CHECK(dz.apply(LogSeries(sols.w0)).is_zero_through(6));
  CHECK(dz.apply(sols.w1).is_zero_through(6));

  // the variant coefficient rule with a single Gamma(n+1) in the denominator
  // is *not* annihilated; this pins the adopted rule
  MultiSeries variant(pol);
  GKZScheme alt = elliptic_scheme();
  for (long n = 0; n <= 6; ++n) {
    Rat c = gkz_coeff(alt, {n, 0, 0, 0}) * factorial(n);
    Exp e;
    e.q[0] = (int32_t)(4 * n);
    variant.add_term(e, Coefficient(c));
  }
  CHECK(!dz.apply(LogSeries(variant)).is_zero_through(6));
}

TEST_CASE("mirror map against the theta quotient") {
  MultiSeries lam = ell_lambda_series(6);
  CHECK(lam.coeff(Exp::from_ints({1})).rational_part() == 16);
  CHECK(lam.coeff(Exp::from_ints({2})).rational_part() == -128);
  CHECK(lam.coeff(Exp::from_ints({3})).rational_part() == 704);

  EllReport rep = ell_lambda_identity(12);
  CHECK(rep.checks.pass);
  for (const auto& f : rep.checks.failures) MESSAGE(f.where, ": ", f.detail);
  CHECK(!rep.cn_denominator_note.empty());
}

TEST_CASE("cusp values") {
  // z = 0 corresponds to q = 0: both sides of the quotient vanish there
  MultiSeries lam = ell_lambda_series(4);
  CHECK(lam.constant_term().is_zero());
}

TEST_CASE("chart tables and twisted annihilation") {
  CheckReport rep = ell_s3_tables(10);
  CHECK(rep.pass);
  for (const auto& f : rep.failures) MESSAGE(f.where, ": ", f.detail);
}
