#include "k3lambda/theta.hpp"

#include "k3lambda/linalg.hpp"

#include <cmath>

namespace k3 {

LatticeBound LatticeBound::adequate_for(const TruncationPolicy& pol) {
  long n = pol.primary.cutoff;
  long w = pol.window ? *pol.window : n;
  return LatticeBound{n + 2 * w + 2};
}

MultiSeries jacobi_theta(int kind, const TruncationPolicy& pol) {
  if (pol.arity != 1) throw SeriesError("jacobi_theta wants one variable");
  MultiSeries s(pol);
  long qmax = 4 * pol.primary.cutoff; // exponents in quarter units
  for (long n = 0;; ++n) {
    long quarters;
    switch (kind) {
      case 2: quarters = (2 * n + 1) * (2 * n + 1); break; // (n+1/2)^2
      case 3:
      case 4: quarters = 4 * n * n; break;
      default: throw SeriesError("jacobi_theta kind must be 2, 3 or 4");
    }
    if (quarters > qmax) break;
    Rat c = (kind == 4 && n % 2 == 1) ? -2 : 2;
    if (n == 0) c = (kind == 2) ? 2 : 1;
    Exp e;
    e.q[0] = (int32_t)quarters;
    s.add_term(e, Coefficient(c));
  }
  return s;
}

MultiSeries genus2_theta(const ThetaChar& c, const TruncationPolicy& pol,
                         const LatticeBound& bound) {
  if (pol.arity != 4) throw SeriesError("genus2_theta wants four variables");
  if (bound.value < pol.primary.cutoff) throw SeriesError("inadequate lattice bound");
  MultiSeries out(pol);
  long B4 = 4 * bound.value; // |u1|^2 + |u2|^2 <= bound, in quarter units
  long lim = (long)std::sqrt((double)B4) + 2;
  // X = 2x, Y = 2y run over integers of parity s1 (resp. s2)
  auto range_ok = [&](long X, int par) { return ((X % 2 + 2) % 2) == par; };
  for (long X1 = -lim; X1 <= lim; ++X1) {
    if (!range_ok(X1, c.s[0])) continue;
    for (long Y1 = -lim; Y1 <= lim; ++Y1) {
      if (!range_ok(Y1, c.s[0])) continue;
      long n1 = X1 * X1 + Y1 * Y1;
      if (n1 > B4) continue;
      for (long X2 = -lim; X2 <= lim; ++X2) {
        if (!range_ok(X2, c.s[1])) continue;
        for (long Y2 = -lim; Y2 <= lim; ++Y2) {
          if (!range_ok(Y2, c.s[1])) continue;
          long n2 = X2 * X2 + Y2 * Y2;
          if (n1 + n2 > B4) continue;
          long p4 = X1 * X2 + Y1 * Y2; // 4 * (x1 x2 + y1 y2)
          long m4 = X1 * Y2 - Y1 * X2;
          long nu1 = (X1 - c.s[0]) / 2, mu1 = (Y1 - c.s[0]) / 2;
          long nu2 = (X2 - c.s[1]) / 2, mu2 = (Y2 - c.s[1]) / 2;
          long phase = c.s[2] * (nu1 + mu1) + c.s[3] * (nu2 + mu2);
          Exp e;
          e.q[0] = (int32_t)n1;
          e.q[1] = (int32_t)n2;
          e.q[2] = (int32_t)(p4 + m4);
          e.q[3] = (int32_t)(p4 - m4);
          if (std::abs(e.q[2]) > n1 + n2 || std::abs(e.q[3]) > n1 + n2)
            throw SeriesError("theta window bound violated");
          out.add_term(e, Coefficient(Rat(((phase % 2 + 2) % 2) ? -1 : 1)));
        }
      }
    }
  }
  return out;
}

MultiSeries genus2_theta(int index, const TruncationPolicy& pol) {
  return genus2_theta(theta_table().at(index - 1), pol, LatticeBound::adequate_for(pol));
}

std::vector<MultiSeries> theta_squares(const TruncationPolicy& pol) {
  std::vector<MultiSeries> out;
  out.reserve(10);
  LatticeBound b = LatticeBound::adequate_for(pol);
  for (const auto& tc : theta_table()) {
    MultiSeries t = genus2_theta(tc, pol, b);
    out.push_back(t * t);
  }
  return out;
}

MultiSeries theta_tilde(const TruncationPolicy& pol) {
  // extraction ring: weight cutoff N+2 and the graded functional that makes
  // the leading term of the square a single monomial (64 q1 q2 / q3)^2
  TruncationPolicy ext = pol;
  ext.primary.cutoff = pol.primary.cutoff + 2;
  long wv = pol.window ? *pol.window : pol.primary.cutoff;
  if (ext.window) ext.window = wv + 2;
  Grading g;
  g.weights = {3, 3, 2, 1};
  g.cutoff = 3 * ext.primary.cutoff + 3 * (wv + 2);
  if (pol.extra) {
    if (pol.extra->weights != g.weights)
      throw SeriesError("theta_tilde: incompatible extra grading");
    g.cutoff = std::max(g.cutoff, pol.extra->cutoff);
  }
  ext.extra = g;

  std::vector<MultiSeries> sq = theta_squares(ext);
  MultiSeries sum4(ext), sum8(ext);
  for (const auto& s : sq) {
    MultiSeries s2 = s * s;
    sum4 = sum4 + s2;
    sum8 = sum8 + s2 * s2;
  }
  MultiSeries comb = (sum4 * sum4 - sum8.scaled(Coefficient(4))).scaled(Coefficient(rat(1, 12)));
  Exp lead;
  lead.q[0] = 4;
  lead.q[1] = 4;
  lead.q[2] = -4;
  MultiSeries root = comb.sqrt_with_leading({Rat(64), lead});
  if (!(root * root == comb)) throw SeriesError("theta combination is not a perfect square");
  return root.restricted(pol);
}

long series_rank(const std::vector<MultiSeries>& list) {
  std::map<Exp, size_t> cols;
  for (const auto& s : list)
    for (const auto& [e, c] : s.terms())
      cols.emplace(e, 0);
  size_t k = 0;
  for (auto& [e, idx] : cols) idx = k++;
  RatMat m;
  for (const auto& s : list) {
    RatRow row(cols.size(), Rat(0));
    for (const auto& [e, c] : s.terms()) {
      if (!c.is_rational()) throw SeriesError("rank over Q needs rational coefficients");
      row[cols[e]] = c.rational_part();
    }
    m.push_back(std::move(row));
  }
  return (long)rank(std::move(m));
}

long theta_square_rank(const TruncationPolicy& pol) {
  std::vector<MultiSeries> sq = theta_squares(pol);
  size_t cols = 0;
  std::map<Exp, bool> seen;
  for (const auto& s : sq)
    for (const auto& [e, c] : s.terms()) seen.emplace(e, true);
  cols = seen.size();
  if (cols < 10) throw SeriesError("underdetermined policy for the rank computation");
  return series_rank(sq);
}

} // namespace k3
