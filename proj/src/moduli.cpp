#include "k3lambda/moduli.hpp"

namespace k3 {

namespace {
Exp ze(int a, int b, int c, int d) { return Exp::from_ints({a, b, c, d}); }

Poly build_p(int slot) {
  // slot order follows y_table(): s = 0,1,2,3,4,6,7,8,9,10
  Poly p = Poly::zero(4);
  switch (slot) {
    case 0: // 1 - (z1z2 + z1z3 + z2z3 + z1z2z3) z4 - z1z2z3 z4^2
      p.add(ze(0, 0, 0, 0), 1);
      p.add(ze(1, 1, 0, 1), -1);
      p.add(ze(1, 0, 1, 1), -1);
      p.add(ze(0, 1, 1, 1), -1);
      p.add(ze(1, 1, 1, 1), -1);
      p.add(ze(1, 1, 1, 2), -1);
      break;
    case 1: // -z1 z2 (1 + z3) z4
      p.add(ze(1, 1, 0, 1), -1);
      p.add(ze(1, 1, 1, 1), -1);
      break;
    case 2: // -1 + z1 z3 z4
      p.add(ze(0, 0, 0, 0), -1);
      p.add(ze(1, 0, 1, 1), 1);
      break;
    case 3: // -1 + z2 z3 z4
      p.add(ze(0, 0, 0, 0), -1);
      p.add(ze(0, 1, 1, 1), 1);
      break;
    case 4: // -z1 z2 (1 + z3 z4) z4
      p.add(ze(1, 1, 0, 1), -1);
      p.add(ze(1, 1, 1, 2), -1);
      break;
    case 5: // s=6: -(1 + z1 z4) z2 z3 z4
      p.add(ze(0, 1, 1, 1), -1);
      p.add(ze(1, 1, 1, 2), -1);
      break;
    case 6: // s=7: z1 (1 + z2) z3 z4
      p.add(ze(1, 0, 1, 1), 1);
      p.add(ze(1, 1, 1, 1), 1);
      break;
    case 7: // s=8: (1 + z1) z2 z3 z4
      p.add(ze(0, 1, 1, 1), 1);
      p.add(ze(1, 1, 1, 1), 1);
      break;
    case 8: // s=9: -z1 z3 z4 (1 + z2 z4)
      p.add(ze(1, 0, 1, 1), -1);
      p.add(ze(1, 1, 1, 2), -1);
      break;
    case 9: // s=10: 1 - z1 z2 z4
      p.add(ze(0, 0, 0, 0), 1);
      p.add(ze(1, 1, 0, 1), -1);
      break;
    default: throw SeriesError("bad semi-invariant slot");
  }
  return p;
}
} // namespace

const std::vector<Poly>& p_polynomials() {
  static const std::vector<Poly> table = [] {
    std::vector<Poly> t;
    for (int s = 0; s < 10; ++s) t.push_back(build_p(s));
    return t;
  }();
  return table;
}

const std::vector<Poly>& q_polynomials() {
  static const std::vector<Poly> table = [] {
    // z1 = t1, z2 = t1 t3, z3 = t2 t4, z4 = t2 / t1
    std::vector<SignedMonomial> images = {
        {1, ze(1, 0, 0, 0)}, {1, ze(1, 0, 1, 0)}, {1, ze(0, 1, 0, 1)}, {1, ze(-1, 1, 0, 0)}};
    std::vector<Poly> t;
    for (const Poly& p : p_polynomials()) {
      Poly q = p.substitute_monomials(images, 4);
      for (const auto& [e, c] : q.terms)
        for (int i = 0; i < 4; ++i)
          if (e.q[i] < 0) throw SeriesError("flip-chart image is not a polynomial");
      t.push_back(q);
    }
    return t;
  }();
  return table;
}

Mat36 matrix_from_z(const ZPoint& z) {
  for (const Rat& v : z)
    if (v == 0) throw SeriesError("matrix_from_z: coordinate on the boundary");
  Rat a2 = -1 / z[1];
  Rat b2 = z[0] * z[1] * z[3];
  Rat c1 = -z[0] * z[1] * z[2] * z[3];
  Rat c2 = z[1] * z[2] * z[3];
  Mat36 a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) a[i][j] = (i == j) ? 1 : 0;
  // columns 3,4,5 hold (a2,a0,a1), (b1,b2,b0), (c0,c1,c2)
  a[0][3] = a2; a[1][3] = 1; a[2][3] = 1;
  a[0][4] = 1;  a[1][4] = b2; a[2][4] = 1;
  a[0][5] = 1;  a[1][5] = c1; a[2][5] = c2;
  // the distinguished chart only needs its own factorization data; minors
  // used by another chart are checked when that chart is read
  for (int j = 3; j < 6; ++j)
    for (int i = 0; i < 3; ++i)
      if (a[i][j] == 0) throw SeriesError("matrix_from_z: vanishing entry");
  return a;
}

Rat minor3(const Mat36& a, int c0, int c1, int c2) {
  return a[0][c0] * (a[1][c1] * a[2][c2] - a[1][c2] * a[2][c1]) -
         a[0][c1] * (a[1][c0] * a[2][c2] - a[1][c2] * a[2][c0]) +
         a[0][c2] * (a[1][c0] * a[2][c1] - a[1][c1] * a[2][c0]);
}

Rat y_value(const Mat36& a, const Partition& p) {
  return minor3(a, p.b1[0], p.b1[1], p.b1[2]) * minor3(a, p.b2[0], p.b2[1], p.b2[2]);
}

ChartRead chart_read(const Mat36& a, const Perm6& sigma) {
  // right action: slot j of A sigma holds column sigma(j) of A
  Mat36 as{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) as[i][j] = a[i][sigma(j)];
  // as = B (E3 X): B is the leading 3x3 block
  std::array<std::array<Rat, 3>, 3> b{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = as[i][j];
  Rat det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
            b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
            b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  if (det == 0) throw SeriesError("chart_read: singular leading block");
  std::array<std::array<Rat, 3>, 3> inv;
  inv[0][0] = (b[1][1] * b[2][2] - b[1][2] * b[2][1]) / det;
  inv[0][1] = (b[0][2] * b[2][1] - b[0][1] * b[2][2]) / det;
  inv[0][2] = (b[0][1] * b[1][2] - b[0][2] * b[1][1]) / det;
  inv[1][0] = (b[1][2] * b[2][0] - b[1][0] * b[2][2]) / det;
  inv[1][1] = (b[0][0] * b[2][2] - b[0][2] * b[2][0]) / det;
  inv[1][2] = (b[0][2] * b[1][0] - b[0][0] * b[1][2]) / det;
  inv[2][0] = (b[1][0] * b[2][1] - b[1][1] * b[2][0]) / det;
  inv[2][1] = (b[0][1] * b[2][0] - b[0][0] * b[2][1]) / det;
  inv[2][2] = (b[0][0] * b[1][1] - b[0][1] * b[1][0]) / det;
  std::array<std::array<Rat, 3>, 3> x{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat s = 0;
      for (int k = 0; k < 3; ++k) s += inv[i][k] * as[k][j + 3];
      x[i][j] = s;
    }
  // X = [[a2,b1,c0],[a0,b2,c1],[a1,b0,c2]]
  Rat a2 = x[0][0], b1 = x[0][1], c0 = x[0][2];
  Rat a0 = x[1][0], b2 = x[1][1], c1 = x[1][2];
  Rat a1 = x[2][0], b0 = x[2][1], c2 = x[2][2];
  for (const Rat& v : {a0, a1, a2, b0, b1, b2, c0, c1, c2})
    if (v == 0) throw SeriesError("chart_read: degenerate factorization");
  ChartRead out;
  out.z = {-(a1 * c1) / (a0 * c2), -(a1 * b1) / (a2 * b0), -(b1 * c1) / (b2 * c0),
           (a2 * b2 * c2) / (a1 * b1 * c1)};
  out.denom = det * det * a0 * b0 * c0;
  return out;
}

S6Action s6_action_numeric(const Perm6& sigma, const ZPoint& z) {
  Mat36 a = matrix_from_z(z);
  ChartRead e = chart_read(a, Perm6::identity());
  ChartRead s = chart_read(a, sigma);
  S6Action out;
  out.z_sigma = s.z;
  out.twist = s.denom / e.denom;
  return out;
}

CheckReport twist_identity_at(const Perm6& sigma, const ZPoint& z) {
  CheckReport rep;
  S6Action act = s6_action_numeric(sigma, z);
  const auto& ps = p_polynomials();
  const auto& yt = y_table();
  std::vector<Rat> zv(z.begin(), z.end());
  std::vector<Rat> zs(act.z_sigma.begin(), act.z_sigma.end());
  Perm6 siginv = sigma.inverse();
  for (int slot = 0; slot < 10; ++slot) {
    auto [moved, sign] = apply_perm(siginv, yt[slot].part);
    Rat lhs = ps[slot].eval(zv);
    Rat rhs = act.twist * Rat(sign) * ps[y_slot_of(moved)].eval(zs);
    if (lhs != rhs)
      rep.fail("twist identity, I = " + yt[slot].part.str(),
               "mismatch at sigma = " + sigma.one_line());
  }
  return rep;
}

CheckReport o2_alpha_check() {
  CheckReport rep;
  // second-chart coordinates: z_k = t_k t_4 (k<=3), z_4 = 1/t_4
  std::vector<SignedMonomial> images = {
      {1, ze(1, 0, 0, 1)}, {1, ze(0, 1, 0, 1)}, {1, ze(0, 0, 1, 1)}, {1, ze(0, 0, 0, -1)}};
  Perm6 alpha = Perm6::from_one_line({6, 4, 5, 2, 3, 1});
  const auto& ps = p_polynomials();
  const auto& yt = y_table();
  for (int slot = 0; slot < 10; ++slot) {
    Poly moved = ps[slot].substitute_monomials(images, 4);
    for (const auto& [e, c] : moved.terms)
      for (int i = 0; i < 4; ++i)
        if (e.q[i] < 0) rep.fail("alpha transport " + yt[slot].part.str(), "not a polynomial");
    auto [ap, sign] = apply_perm(alpha, yt[slot].part);
    Poly expected = ps[y_slot_of(ap)];
    if (sign < 0) expected = Poly::zero(4) - expected;
    if (!(moved == expected))
      rep.fail("alpha identity " + yt[slot].part.str(), "polynomials differ");
  }
  return rep;
}

namespace {
Rat safe_div(const Rat& a, const Rat& b) {
  if (b == 0) throw SeriesError("closed form evaluated at a pole");
  return a / b;
}
} // namespace

// Notes on the three tabulated transformations:
//  - the tabulated quotients are the reciprocals of the chart twist
//    G(sigma,e) = P_I(z)/P_{sigma^-1(I)}(z^sigma); the reciprocal passes the
//    defining identity at random points, the literal value does not;
//  - the garbled factor in the fourth coordinate of the middle row reads
//    (1 + z3 z4), with the overall sign of that coordinate positive.
// Both resolutions are pinned by the numeric action and flagged in reports.
const std::vector<ClosedForm>& sample_closed_forms() {
  static const std::vector<ClosedForm> forms = [] {
    std::vector<ClosedForm> f;
    {
      ClosedForm cf;
      cf.sigma = Perm6::from_one_line({1, 2, 3, 6, 5, 4});
      cf.z_map = [](const ZPoint& z) -> ZPoint {
        return {safe_div(1, z[0]), -(z[1] * z[2] * z[3]), safe_div(1, z[0] * z[3]),
                safe_div(z[0], z[2])};
      };
      cf.twist = [](const ZPoint& z) -> Rat { return z[0] * z[2] * z[3]; };
      f.push_back(cf);
    }
    {
      ClosedForm cf;
      cf.sigma = Perm6::from_one_line({2, 3, 4, 5, 6, 1});
      cf.z_map = [](const ZPoint& z) -> ZPoint {
        Rat d = 1 - z[0] * z[2] * z[3];
        return {safe_div(-z[1], 1 + z[1]), safe_div(-d, 1 + z[0] * z[3]),
                safe_div(-d, 1 + z[2] * z[3]),
                safe_div((1 + z[0] * z[3]) * (1 + z[2] * z[3]), d)};
      };
      cf.twist = [](const ZPoint& z) -> Rat { return -(1 + z[1]); };
      f.push_back(cf);
    }
    {
      ClosedForm cf;
      cf.sigma = Perm6::from_one_line({6, 5, 4, 3, 2, 1});
      cf.z_map = [](const ZPoint& z) -> ZPoint {
        Rat z1 = z[0], z2 = z[1], z3 = z[2], z4 = z[3];
        return {safe_div(-(1 + z1) * z2 * (1 + z3) * z4, (1 + z2 * z4) * (1 - z1 * z3 * z4)),
                safe_div(-z1 * (1 + z2) * (1 + z3) * z4, (1 + z1 * z4) * (1 - z2 * z3 * z4)),
                safe_div(-(1 + z1) * (1 + z2) * z3 * z4, (1 - z1 * z2 * z4) * (1 + z3 * z4)),
                safe_div((1 + z1 * z4) * (1 + z2 * z4) * (1 + z3 * z4),
                         (1 + z1) * (1 + z2) * (1 + z3) * z4)};
      };
      cf.twist = [](const ZPoint& z) {
        Rat z1 = z[0], z2 = z[1], z3 = z[2], z4 = z[3];
        Rat p0 = 1 - (z1 * z2 + z1 * z3 + z2 * z3 + z1 * z2 * z3) * z4 - z1 * z2 * z3 * z4 * z4;
        return safe_div((1 - z1 * z2 * z4) * (1 - z1 * z3 * z4) * (1 - z2 * z3 * z4), p0);
      };
      f.push_back(cf);
    }
    return f;
  }();
  return forms;
}

} // namespace k3
