#include <doctest.h>

#include "k3lambda/logseries.hpp"
#include "k3lambda/series.hpp"

#include <random>

using namespace k3;

namespace {

TruncationPolicy pol1(long n) { return TruncationPolicy::total(1, n); }

MultiSeries from_coeffs(const TruncationPolicy& p, std::initializer_list<long> cs) {
  MultiSeries s(p);
  int k = 0;
  for (long c : cs) {
    Exp e;
    e.q[0] = 4 * k++;
    s.add_term(e, Coefficient(Rat(c)));
  }
  return s;
}

MultiSeries random_series(const TruncationPolicy& p, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-6, 6), deg(0, 1);
  MultiSeries s(p);
  for (int t = 0; t < 8; ++t) {
    Exp e;
    for (int i = 0; i < p.arity; ++i)
      if (p.primary.weights[i] > 0) e.q[i] = 4 * deg(rng);
    s.add_term(e, Coefficient(Rat(coeff(rng))));
  }
  return s;
}

} // namespace

TEST_CASE("basic arithmetic matches the worked examples") {
  TruncationPolicy p = pol1(2);
  MultiSeries a = from_coeffs(p, {1, 1});  // 1 + q
  MultiSeries b = from_coeffs(p, {1, -1}); // 1 - q
  MultiSeries prod = a * b;
  CHECK(prod == from_coeffs(p, {1, 0, -1})); // 1 - q^2

  MultiSeries scaled = a.scaled(Coefficient(rat(3, 2)));
  CHECK(scaled.coeff(Exp{}).rational_part() == rat(3, 2));
  CHECK(scaled.coeff(Exp::from_ints({1})).rational_part() == rat(3, 2));
}

TEST_CASE("monomial multiplication respects the Laurent window") {
  TruncationPolicy p = TruncationPolicy::weighted(4, {1, 1, 0, 0}, 3, 1);
  MultiSeries a(p);
  a.add_term(Exp{}, Coefficient(1));
  a.add_term(Exp::from_ints({1, 0, 0, 0}), Coefficient(1)); // 1 + q1
  MultiSeries shifted = a.mul_monomial(1, Exp::from_ints({0, 0, -1, 0}));
  CHECK(shifted.size() == 2);
  CHECK(shifted.coeff(Exp::from_ints({0, 0, -1, 0})).rational_part() == 1);
  CHECK(shifted.coeff(Exp::from_ints({1, 0, -1, 0})).rational_part() == 1);
  // window 1 kills a second shift down
  MultiSeries gone = shifted.mul_monomial(1, Exp::from_ints({0, 0, -1, 0}));
  CHECK(gone.coeff(Exp::from_ints({0, 0, -2, 0})).is_zero());
}

TEST_CASE("invert_unit") {
  CHECK(from_coeffs(pol1(3), {1, 1}).invert_unit() == from_coeffs(pol1(3), {1, -1, 1, -1}));
  MultiSeries two = MultiSeries::constant(pol1(3), Coefficient(2));
  CHECK(two.invert_unit().constant_term().rational_part() == rat(1, 2));

  TruncationPolicy p2 = TruncationPolicy::total(2, 2);
  MultiSeries u(p2);
  u.add_term(Exp{}, Coefficient(1));
  u.add_term(Exp::from_ints({1, 0}), Coefficient(8));
  u.add_term(Exp::from_ints({0, 1}), Coefficient(8));
  MultiSeries inv = u.invert_unit();
  CHECK((u * inv) == MultiSeries::constant(p2, Coefficient(1)));
  CHECK(inv.coeff(Exp::from_ints({2, 0})).rational_part() == 64);
  CHECK(inv.coeff(Exp::from_ints({1, 1})).rational_part() == 128);

  MultiSeries bad(p2);
  bad.add_term(Exp::from_ints({1, 0}), Coefficient(1));
  CHECK_THROWS_AS(bad.invert_unit(), SeriesError);
}

TEST_CASE("exp and log") {
  MultiSeries q = from_coeffs(pol1(3), {0, 1});
  MultiSeries e = q.exp_series();
  CHECK(e.coeff(Exp::from_ints({2})).rational_part() == rat(1, 2));
  CHECK(e.coeff(Exp::from_ints({3})).rational_part() == rat(1, 6));

  MultiSeries l = from_coeffs(pol1(3), {1, 1}).log_series();
  CHECK(l.coeff(Exp::from_ints({1})).rational_part() == 1);
  CHECK(l.coeff(Exp::from_ints({2})).rational_part() == rat(-1, 2));
  CHECK(l.coeff(Exp::from_ints({3})).rational_part() == rat(1, 3));

  TruncationPolicy p2 = TruncationPolicy::total(2, 4);
  MultiSeries u(p2);
  u.add_term(Exp{}, Coefficient(1));
  u.add_term(Exp::from_ints({1, 0}), Coefficient(1));
  u.add_term(Exp::from_ints({0, 1}), Coefficient(1));
  CHECK(u.log_series().exp_series() == u);

  CHECK_THROWS_AS(u.exp_series(), SeriesError);
  CHECK_THROWS_AS(from_coeffs(pol1(2), {2, 1}).log_series(), SeriesError);
}

TEST_CASE("sqrt_with_leading") {
  MultiSeries q2 = MultiSeries::monomial(pol1(3), Exp::from_ints({2}));
  CHECK(q2.sqrt_with_leading({1, Exp::from_ints({1})}) ==
        MultiSeries::monomial(pol1(3), Exp::from_ints({1})));

  MultiSeries a(pol1(5));
  a.add_term(Exp::from_ints({2}), Coefficient(1));
  a.add_term(Exp::from_ints({3}), Coefficient(1)); // q^2 (1+q)
  MultiSeries r = a.sqrt_with_leading({-1, Exp::from_ints({1})});
  CHECK(r.coeff(Exp::from_ints({1})).rational_part() == -1);
  CHECK(r.coeff(Exp::from_ints({2})).rational_part() == rat(-1, 2));
  CHECK(r.coeff(Exp::from_ints({3})).rational_part() == rat(1, 8));
  CHECK(r * r == a);

  TruncationPolicy p2 = TruncationPolicy::total(2, 2);
  MultiSeries b(p2);
  b.add_term(Exp{}, Coefficient(1));
  b.add_term(Exp::from_ints({1, 0}), Coefficient(2)); // 1 + 2 q1
  MultiSeries rb = b.sqrt_with_leading({1, Exp{}});
  CHECK(rb.coeff(Exp::from_ints({1, 0})).rational_part() == 1);
  CHECK(rb.coeff(Exp::from_ints({2, 0})).rational_part() == rat(-1, 2));
  CHECK(rb * rb == b);

  CHECK_THROWS_AS(from_coeffs(pol1(3), {0, 1}).sqrt_with_leading({1, Exp{}}), SeriesError);
}

TEST_CASE("substitute_monomials relabelings") {
  TruncationPolicy src = TruncationPolicy::weighted(4, {1, 1, 1, 1}, 6);
  // the image policy of src under the dictionary below: total degree pulls
  // back to the (3,3,2,1) functional, so both routes truncate identically
  TruncationPolicy dst = TruncationPolicy::weighted(4, {1, 1, 0, 0}, 6);
  {
    Grading g;
    g.weights = {3, 3, 2, 1};
    g.cutoff = 6;
    dst.extra = g;
  }
  MultiSeries a = MultiSeries::monomial(src, Exp::from_ints({1, 1, 0, 0})); // Q1 Q2
  std::vector<SignedMonomial> images = {{1, Exp::from_ints({1, 0, -1, 0})},
                                        {1, Exp::from_ints({0, 1, -1, 0})},
                                        {-1, Exp::from_ints({0, 0, 0, 1})},
                                        {-1, Exp::from_ints({0, 0, 1, -1})}};
  MultiSeries img = a.substitute_monomials(images, dst);
  CHECK(img == MultiSeries::monomial(dst, Exp::from_ints({1, 1, -2, 0})));

  // z4 through the second-chart relation ends up inverted
  std::vector<SignedMonomial> o2 = {{1, Exp::from_ints({1, 0, 0, 1})},
                                    {1, Exp::from_ints({0, 1, 0, 1})},
                                    {1, Exp::from_ints({0, 0, 1, 1})},
                                    {1, Exp::from_ints({0, 0, 0, -1})}};
  TruncationPolicy lau = TruncationPolicy::weighted(4, {1, 1, 1, 0}, 8, 8);
  MultiSeries z4 = MultiSeries::monomial(src, Exp::from_ints({0, 0, 0, 1}));
  CHECK(z4.substitute_monomials(o2, lau) ==
        MultiSeries::monomial(lau, Exp::from_ints({0, 0, 0, -1})));

  // flip-chart relabel of a plain coordinate
  std::vector<SignedMonomial> flip = {{1, Exp::from_ints({1, 0, 0, 0})},
                                      {1, Exp::from_ints({1, 0, 1, 0})},
                                      {1, Exp::from_ints({0, 1, 0, 1})},
                                      {1, Exp::from_ints({-1, 1, 0, 0})}};
  MultiSeries z2 = MultiSeries::monomial(src, Exp::from_ints({0, 1, 0, 0}));
  CHECK(z2.substitute_monomials(flip, src) ==
        MultiSeries::monomial(src, Exp::from_ints({1, 0, 1, 0})));

  // sign bookkeeping under odd powers
  MultiSeries q3cube = MultiSeries::monomial(src, Exp::from_ints({0, 0, 3, 0}));
  MultiSeries neg = q3cube.substitute_monomials(images, dst);
  CHECK(neg.coeff(Exp::from_ints({0, 0, 0, 3})).rational_part() == -1);

  // substitution is a ring map
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    MultiSeries x = random_series(src, rng), y = random_series(src, rng);
    MultiSeries lhs = (x * y).substitute_monomials(images, dst);
    MultiSeries rhs =
        x.substitute_monomials(images, dst) * y.substitute_monomials(images, dst);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("compose_poly") {
  Poly p = Poly::constant(4, -1);
  p.add(Exp::from_ints({1, 0, 1, 1}), 1); // -1 + t1 t3 t4
  TruncationPolicy pq = TruncationPolicy::weighted(4, {1, 0, 0, 0}, 5);
  MultiSeries q = MultiSeries::monomial(pq, Exp::from_ints({1, 0, 0, 0}));
  MultiSeries r = compose_poly(p, {q, q, q, q});
  CHECK(r.coeff(Exp{}).rational_part() == -1);
  CHECK(r.coeff(Exp::from_ints({3, 0, 0, 0})).rational_part() == 1);
}

TEST_CASE("euler_theta on series and logs") {
  TruncationPolicy p4 = TruncationPolicy::weighted(4, {1, 1, 0, 0}, 4, 4);
  MultiSeries z1sq = MultiSeries::monomial(p4, Exp::from_ints({2, 0, 0, 0}));
  CHECK(z1sq.euler_theta(0).coeff(Exp::from_ints({2, 0, 0, 0})).rational_part() == 2);

  LogSeries l1(p4);
  l1.add(LogKey::unit(0), MultiSeries::constant(p4, Coefficient(1)));
  LogSeries t = l1.euler_theta(0);
  CHECK(t.plain_part().constant_term().rational_part() == 1);
  CHECK(t.log_degree() == 0);

  Exp half;
  half.q[2] = 2; // q3^(1/2)
  MultiSeries s = MultiSeries::monomial(p4, half);
  CHECK(s.euler_theta(2).coeff(half).rational_part() == rat(1, 2));

  // derivation rule including log terms
  std::mt19937 rng(11);
  for (int t2 = 0; t2 < 20; ++t2) {
    MultiSeries f = random_series(p4, rng), g = random_series(p4, rng);
    LogSeries a(p4), b(p4);
    a.add(LogKey{}, f);
    a.add(LogKey::unit(1), g);
    b.add(LogKey::unit(0), f);
    b.add(LogKey{}, g);
    for (int i = 0; i < 4; ++i) {
      LogSeries lhs = (a * b).euler_theta(i);
      LogSeries rhs = a.euler_theta(i) * b + a * b.euler_theta(i);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("solve_fixed_point") {
  TruncationPolicy p = pol1(3);
  MultiSeries q = MultiSeries::monomial(p, Exp::from_ints({1}));
  auto id = [&](const std::vector<MultiSeries>& z) { return z; };
  std::vector<MultiSeries> sol = solve_fixed_point({q}, id);
  // z = Q exp(z): Q + Q^2 + 3/2 Q^3
  CHECK(sol[0].coeff(Exp::from_ints({1})).rational_part() == 1);
  CHECK(sol[0].coeff(Exp::from_ints({2})).rational_part() == 1);
  CHECK(sol[0].coeff(Exp::from_ints({3})).rational_part() == rat(3, 2));

  auto zero = [&](const std::vector<MultiSeries>& z) {
    return std::vector<MultiSeries>{MultiSeries(p)};
  };
  CHECK(solve_fixed_point({q}, zero)[0] == q);

  TruncationPolicy p2 = TruncationPolicy::total(2, 4);
  MultiSeries q1 = MultiSeries::monomial(p2, Exp::from_ints({1, 0}));
  MultiSeries q2 = MultiSeries::monomial(p2, Exp::from_ints({0, 1}));
  auto crossed = [&](const std::vector<MultiSeries>& z) {
    return std::vector<MultiSeries>{z[1], z[0]};
  };
  std::vector<MultiSeries> pair = solve_fixed_point({q1, q2}, crossed);
  CHECK(pair[0].coeff(Exp::from_ints({1, 0})).rational_part() == 1);
  CHECK(pair[0].coeff(Exp::from_ints({1, 1})).rational_part() == 1);
  // substitute back
  CHECK(pair[0] == q1 * pair[1].exp_series());
  CHECK(pair[1] == q2 * pair[0].exp_series());

  auto constant = [&](const std::vector<MultiSeries>& z) {
    return std::vector<MultiSeries>{MultiSeries::constant(p2, Coefficient(1)), z[1]};
  };
  CHECK_THROWS_AS(solve_fixed_point({q1, q2}, constant), SeriesError);
}

TEST_CASE("ring axioms on random operands") {
  std::mt19937 rng(42);
  TruncationPolicy p = TruncationPolicy::weighted(4, {1, 1, 0, 0}, 3, 2);
  for (int t = 0; t < 100; ++t) {
    MultiSeries a = random_series(p, rng), b = random_series(p, rng), c = random_series(p, rng);
    CHECK((a + b) * c == (a * c) + (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("coefficient symbol algebra") {
  Coefficient k = Coefficient::kappa();
  Coefficient p = Coefficient::varpi();
  Coefficient prod = k * k;
  CHECK(prod.part(2, 0) == 1);
  CHECK((k * p).part(1, 1) == 1);
  CHECK_THROWS_AS(prod * k, std::domain_error);
  Coefficient mixed = Coefficient(rat(1, 2)) + Coefficient::kappa(rat(-2, 1));
  CHECK(mixed.part(0, 0) == rat(1, 2));
  CHECK(mixed.part(1, 0) == -2);
  CHECK((mixed - mixed).is_zero());
}

TEST_CASE("truncation soundness inside the smaller box") {
  std::mt19937 rng(5);
  for (int t = 0; t < 25; ++t) {
    // cone-supported inputs recomputed at a larger policy agree inside (N, W)
    TruncationPolicy small = TruncationPolicy::weighted(4, {1, 1, 0, 0}, 2, 1);
    TruncationPolicy big = TruncationPolicy::weighted(4, {1, 1, 0, 0}, 3, 2);
    MultiSeries xa(small), xb(big);
    for (int terms = 0; terms < 6; ++terms) {
      std::uniform_int_distribution<int> w(0, 1), c(-4, 4);
      int e1 = w(rng), e2 = w(rng);
      int e3 = std::uniform_int_distribution<int>(-(e1 + e2), e1 + e2)(rng);
      int e4 = std::uniform_int_distribution<int>(-(e1 + e2), e1 + e2)(rng);
      Exp e = Exp::from_ints({e1, e2, e3, e4});
      Coefficient cc{Rat(c(rng))};
      xa.add_term(e, cc);
      xb.add_term(e, cc);
    }
    MultiSeries pa = (xa * xa).boxed(2, 1);
    MultiSeries pb = (xb * xb).boxed(2, 1);
    CHECK(pa == pb);
  }
}
