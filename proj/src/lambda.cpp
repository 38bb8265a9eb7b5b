#include "k3lambda/lambda.hpp"

#include "k3lambda/moduli.hpp"

#include <sstream>

namespace k3 {

namespace {

Exp qe(int a, int b, int c, int d) { return Exp::from_ints({a, b, c, d}); }

/// Cache of z(q)^n products, filled on demand along decreasing components.
struct MonomialCache {
  const std::vector<MultiSeries>& z;
  std::map<Exp, MultiSeries> pows;
  explicit MonomialCache(const std::vector<MultiSeries>& zz) : z(zz) {
    pows.emplace(Exp{}, MultiSeries::constant(z[0].policy(), Coefficient(1)));
  }
  const MultiSeries& get(const Exp& n) {
    auto it = pows.find(n);
    if (it != pows.end()) return it->second;
    int i = 0;
    while (n.q[i] == 0) ++i;
    Exp down = n;
    down.q[i] -= 4;
    MultiSeries v = get(down) * z[i];
    return pows.emplace(n, std::move(v)).first->second;
  }
};

MultiSeries eval_zseries(const MultiSeries& f_z, MonomialCache& cache) {
  MultiSeries out(cache.z[0].policy());
  for (const auto& [e, c] : f_z.terms()) out = out + cache.get(e).scaled(c);
  return out;
}

std::array<int, 4> side_zweights(Side side) {
  return side == Side::o1 ? std::array<int, 4>{1, 1, 0, 0} : std::array<int, 4>{0, 0, 1, 1};
}

long side_wmax(Side side, long N, long W) {
  return side == Side::o1 ? 3 * N + 3 * W : 3 * N + 2 * W;
}

TruncationPolicy side_z_policy(Side side, long N, long W) {
  TruncationPolicy p = TruncationPolicy::weighted(4, side_zweights(side), N);
  Grading g;
  g.weights = {1, 1, 1, 1};
  g.cutoff = side_wmax(side, N, W);
  p.extra = g;
  return p;
}

std::array<SignedMonomial, 4> side_dictionary(Side side, const std::array<int, 4>& eps) {
  if (side == Side::o1)
    return {SignedMonomial{1, qe(1, 0, -1, 0)}, {1, qe(0, 1, -1, 0)}, {-1, qe(0, 0, 0, 1)},
            {-1, qe(0, 0, 1, -1)}};
  // flip side: q1 = e1 Q1 Q2 Q4, q2 = e2 Q1 Q2 Q3, q3 = e3 Q2, q4 = e4 Q1
  return {SignedMonomial{Rat(eps[3]), qe(0, 0, 0, 1)}, {Rat(eps[2]), qe(0, 0, 1, 0)},
          {Rat(eps[1] * eps[2] * eps[3]), qe(0, 1, -1, -1)},
          {Rat(eps[0] * eps[2] * eps[3]), qe(1, 0, -1, -1)}};
}

} // namespace

TruncationPolicy side_q_policy(Side side, long N, long W) {
  TruncationPolicy p = TruncationPolicy::weighted(4, {1, 1, 0, 0}, N);
  Grading g;
  g.weights = side == Side::o1 ? std::array<int, 4>{3, 3, 2, 1} : std::array<int, 4>{3, 3, 1, 1};
  g.cutoff = side_wmax(side, N, W);
  p.extra = g;
  return p;
}

namespace {

struct PeriodData {
  MultiSeries w0;                 // z-ring
  std::vector<MultiSeries> S;     // S_k = sigma_k/w0 - const, rational
  std::array<Rat, 4> lead;        // c_k with z_k = c_k Q_k + ...
};

PeriodData build_periods(Side side, const TruncationPolicy& zpol) {
  GKZScheme sch = scheme(side == Side::o1 ? Scheme::o1 : Scheme::o1plus);
  long wmax = zpol.extra->cutoff;
  MultiSeries w0(zpol);
  std::vector<MultiSeries> sigma(4, MultiSeries(zpol));
  NVec n;
  for (n[0] = 0; n[0] <= wmax; ++n[0])
    for (n[1] = 0; n[0] + n[1] <= wmax; ++n[1])
      for (n[2] = 0; n[0] + n[1] + n[2] <= wmax; ++n[2])
        for (n[3] = 0; n[0] + n[1] + n[2] + n[3] <= wmax; ++n[3]) {
          Exp e = qe((int)n[0], (int)n[1], (int)n[2], (int)n[3]);
          if (!zpol.keeps(e)) continue;
          RhoJet jet = sch.jet(n);
          Coefficient c = jet.c0.to_coefficient();
          if (!c.is_zero()) w0.add_term(e, c);
          for (int i = 0; i < 4; ++i) {
            Coefficient d = jet.c1[i].to_coefficient();
            if (!d.is_zero()) sigma[i].add_term(e, d);
          }
        }
  PeriodData out{w0, {}, {}};
  MultiSeries w0inv = w0.invert_unit();
  for (int k = 0; k < 4; ++k) {
    MultiSeries s = sigma[k] * w0inv;
    Coefficient d0 = s.constant_term();
    Rat kpart = d0.part(1, 0);
    if (d0.rational_part() != 0 || d0.part(0, 1) != 0 || !is_integer(kpart) || kpart > 0)
      throw SeriesError("period normalization is not exp(-m log 4)");
    out.lead[k] = pow_rat(2, -to_long(kpart));
    MultiSeries S(zpol);
    for (const auto& [e, c] : s.terms()) {
      if (e.is_origin()) continue;
      if (!c.is_rational()) throw SeriesError("mirror series has a symbolic tail");
      S.add_term(e, c);
    }
    out.S.push_back(S);
  }
  return out;
}

std::vector<MultiSeries> solve_map(const PeriodData& pd,
                                   const std::array<SignedMonomial, 4>& dict,
                                   const std::array<Rat, 4>& lead,
                                   const TruncationPolicy& qpol) {
  std::vector<MultiSeries> monos;
  for (int k = 0; k < 4; ++k)
    monos.push_back(MultiSeries::monomial(qpol, dict[k].second,
                                          Coefficient(lead[k] * dict[k].first)));
  auto func = [&](const std::vector<MultiSeries>& z) {
    MonomialCache cache(z);
    std::vector<MultiSeries> out;
    for (int k = 0; k < 4; ++k) out.push_back(-eval_zseries(pd.S[k], cache));
    return out;
  };
  return solve_fixed_point(monos, func);
}

} // namespace

MirrorMap build_mirror_map(Side side, long N, long W) {
  TruncationPolicy qpol = side_q_policy(side, N, W);
  TruncationPolicy zpol = side_z_policy(side, N, W);
  PeriodData pd = build_periods(side, zpol);

  MirrorMap map(qpol, zpol);
  map.side = side;
  map.w0_z = pd.w0;
  map.lead_constants = pd.lead;

  std::array<Rat, 4> expect = side == Side::o1 ? std::array<Rat, 4>{4, 4, 4, 1}
                                               : std::array<Rat, 4>{4, 4, 1, 1};
  if (pd.lead != expect) throw SeriesError("unexpected mirror normalization constants");

  if (side == Side::o1) {
    map.Q_of_q = side_dictionary(side, map.sign_choice);
    map.z_q = solve_map(pd, map.Q_of_q, pd.lead, qpol);
  } else {
    // fix the residual branch signs by a finite search at a small cutoff
    long smallN = std::min<long>(N, 2), smallW = std::min<long>(W, 2);
    TruncationPolicy sqp = side_q_policy(side, smallN, smallW);
    TruncationPolicy szp = side_z_policy(side, smallN, smallW);
    PeriodData spd = build_periods(side, szp);
    std::vector<std::array<int, 4>> winners;
    for (int mask = 0; mask < 16; ++mask) {
      std::array<int, 4> eps{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1,
                             mask & 8 ? -1 : 1};
      std::vector<MultiSeries> zq;
      try {
        zq = solve_map(spd, side_dictionary(side, eps), spd.lead, sqp);
      } catch (const SeriesError&) {
        continue;
      }
      MonomialCache cache(zq);
      MultiSeries w0q = eval_zseries(spd.w0, cache);
      MultiSeries w0sq = w0q * w0q;
      std::vector<MultiSeries> th = theta_squares(sqp);
      const MultiSeries &t3 = th[2], &t4 = th[3], &t6 = th[5], &t9 = th[8];
      MultiSeries lhs1 = zq[0] * (w0sq - t6);
      MultiSeries rhs1 = t3 + t9 - w0sq;
      MultiSeries lhs2 = zq[1] * (w0sq - t6);
      MultiSeries rhs2 = t4 + t9 - w0sq;
      MultiSeries lhs3 = zq[2] * (w0sq - t9);
      MultiSeries rhs3 = w0sq - t6;
      if (lhs1 == rhs1 && lhs2 == rhs2 && lhs3 == rhs3) winners.push_back(eps);
    }
    if (winners.size() != 1)
      throw SeriesError("flip-side branch search found " + std::to_string(winners.size()) +
                        " sign vectors");
    map.sign_choice = winners[0];
    map.Q_of_q = side_dictionary(side, map.sign_choice);
    map.z_q = solve_map(pd, map.Q_of_q, pd.lead, qpol);
  }

  MonomialCache cache(map.z_q);
  map.w0_q = eval_zseries(pd.w0, cache);
  map.w0sq_q = map.w0_q * map.w0_q;
  return map;
}

MultiSeries omega0_of_q(const MirrorMap& map) { return map.w0_q; }

std::vector<MultiSeries> side_theta_squares(const MirrorMap& map) {
  return theta_squares(map.qpol);
}

namespace {
const std::vector<Poly>& side_invariants(Side side) {
  return side == Side::o1 ? p_polynomials() : q_polynomials();
}
} // namespace

MasterReport verify_master_equation(const MirrorMap& map, const Perm6& sigma,
                                    const std::vector<MultiSeries>& theta_sq) {
  MasterReport rep;
  rep.used = sigma;
  rep.cutoff = map.qpol.primary.cutoff;
  rep.pass = true;
  const auto& inv = side_invariants(map.side);
  const auto& yt = y_table();
  MonomialCache cache(map.z_q);
  for (int slot = 0; slot < 10; ++slot) {
    MultiSeries lhs(map.qpol);
    for (const auto& [e, c] : inv[slot].terms) lhs = lhs + cache.get(e).scaled(Coefficient(c));
    lhs = lhs * map.w0sq_q;
    auto [part, sign] = apply_perm(sigma, yt[slot].part);
    MultiSeries rhs = theta_sq[theta_index_of(part) - 1];
    if (sign < 0) rhs = -rhs;
    bool ok = lhs == rhs;
    rep.slot_pass[slot] = ok;
    if (!ok) {
      rep.pass = false;
      if (rep.first_mismatch.empty()) {
        MultiSeries d = lhs - rhs;
        std::ostringstream os;
        os << "I = " << yt[slot].part.str();
        if (!d.is_zero()) {
          const Exp& e = d.terms().begin()->first;
          os << " at exponent (" << e.value(0).get_str() << "," << e.value(1).get_str() << ","
             << e.value(2).get_str() << "," << e.value(3).get_str() << ")";
        }
        rep.first_mismatch = os.str();
      }
    }
  }
  return rep;
}

std::vector<Perm6> permutation_search(const MirrorMap& map,
                                      const std::vector<MultiSeries>& theta_sq, long cutoff,
                                      bool swap_q34) {
  const auto& inv = side_invariants(map.side);
  const auto& yt = y_table();
  MonomialCache cache(map.z_q);
  std::vector<MultiSeries> lhs;
  for (int slot = 0; slot < 10; ++slot) {
    MultiSeries v(map.qpol);
    for (const auto& [e, c] : inv[slot].terms) v = v + cache.get(e).scaled(Coefficient(c));
    lhs.push_back((v * map.w0sq_q).boxed(cutoff, cutoff));
  }
  std::vector<MultiSeries> th;
  for (const auto& t : theta_sq) {
    MultiSeries u = t;
    if (swap_q34) {
      std::vector<SignedMonomial> sw = {{1, qe(1, 0, 0, 0)}, {1, qe(0, 1, 0, 0)},
                                        {1, qe(0, 0, 0, 1)}, {1, qe(0, 0, 1, 0)}};
      u = t.substitute_monomials(sw, map.qpol);
    }
    th.push_back(u.boxed(cutoff, cutoff));
  }
  std::vector<Perm6> found;
  for (const Perm6& sigma : Perm6::all()) {
    bool ok = true;
    for (int slot = 0; slot < 10 && ok; ++slot) {
      auto [part, sign] = apply_perm(sigma, yt[slot].part);
      MultiSeries rhs = th[theta_index_of(part) - 1];
      if (sign < 0) rhs = -rhs;
      ok = lhs[slot] == rhs;
    }
    if (ok) found.push_back(sigma);
  }
  return found;
}

CheckReport lambda_theta_identities(const MirrorMap& map) {
  CheckReport rep;
  std::vector<MultiSeries> th = theta_squares(map.qpol);
  const MultiSeries &t3 = th[2], &t4 = th[3], &t5 = th[4], &t6 = th[5], &t7 = th[6], &t8 = th[7],
                    &t9 = th[8], &t10 = th[9];
  const MultiSeries& w2 = map.w0sq_q;
  auto expect = [&](const MultiSeries& a, const MultiSeries& b, const std::string& name) {
    if (!(a == b)) rep.fail(name, "series differ");
  };
  if (map.side == Side::o1) {
    expect(map.z_q[0] * (w2 - t7), t3 + t9 - w2, "z1 (w0^2-T7) = T3+T9-w0^2");
    expect(map.z_q[1] * (w2 - t9), t3 + t9 - w2, "z2 (w0^2-T9) = T3+T9-w0^2");
    expect(map.z_q[2] * w2 * (t4 + t9 - w2), (w2 - t7) * (w2 - t9),
           "z3 w0^2 (T4+T9-w0^2) = (w0^2-T7)(w0^2-T9)");
    expect(map.z_q[3] * (t3 + t9 - w2), t4 + t9 - w2, "z4 (T3+T9-w0^2) = T4+T9-w0^2");
  } else {
    expect(map.z_q[0] * (w2 - t6), t3 + t9 - w2, "z1~ (w0^2-T6) = T3+T9-w0^2");
    expect(map.z_q[1] * (w2 - t6), t4 + t9 - w2, "z2~ (w0^2-T6) = T4+T9-w0^2");
    expect(map.z_q[2] * (w2 - t9), w2 - t6, "z3~ (w0^2-T9) = w0^2-T6");
    expect(map.z_q[3] * w2 * (t3 + t9 - w2) * (t4 + t9 - w2), (w2 - t6) * (w2 - t6) * (w2 - t9),
           "z4~ w0^2 (T3+T9-w0^2)(T4+T9-w0^2) = (w0^2-T6)^2 (w0^2-T9)");
  }
  MultiSeries T = t7 * t8 - t10 * t5 + t6 * t9;
  expect(t8 * w2 * w2 - T * w2 + t6 * t7 * t9, MultiSeries(map.qpol),
         "T8 w0^4 - T w0^2 + T6 T7 T9 = 0");
  MultiSeries tt = theta_tilde(map.qpol);
  expect(w2 * t8.scaled(Coefficient(2)), T - tt, "2 T8 w0^2 = T - theta_tilde");
  return rep;
}

CheckReport theta_discriminant_identity(long N) {
  CheckReport rep;
  TruncationPolicy pol = TruncationPolicy::weighted(4, {1, 1, 0, 0}, N, N);
  Grading g;
  g.weights = {3, 3, 2, 1};
  g.cutoff = 6 * N;
  pol.extra = g;
  std::vector<MultiSeries> th = theta_squares(pol);
  MultiSeries T = th[6] * th[7] - th[9] * th[4] + th[5] * th[8];
  MultiSeries lhs = T * T - (th[5] * th[6] * th[7] * th[8]).scaled(Coefficient(4));
  MultiSeries tt = theta_tilde(pol);
  if (!(lhs == tt * tt)) rep.fail("T^2 - 4 T6 T7 T8 T9 = theta_tilde^2", "series differ");
  return rep;
}

CheckReport mirror_roundtrip(const MirrorMap& map) {
  CheckReport rep;
  PeriodData pd = build_periods(map.side, map.zpol);
  MonomialCache cache(map.z_q);
  for (int k = 0; k < 4; ++k) {
    // Q_k recovered: z_k/c_k * exp(S_k(z(q))) must equal the dictionary monomial
    MultiSeries sk = eval_zseries(pd.S[k], cache);
    MultiSeries qk = map.z_q[k].scaled(Coefficient(1 / pd.lead[k])) * sk.exp_series();
    MultiSeries expect = MultiSeries::monomial(map.qpol, map.Q_of_q[k].second,
                                               Coefficient(map.Q_of_q[k].first));
    if (!(qk == expect)) rep.fail("roundtrip Q_" + std::to_string(k + 1), "not a monomial");
  }
  return rep;
}

CheckReport tcoordinate_quadratic(Side side, long N) {
  CheckReport rep;
  PFSystem sys = pf_system(side == Side::o1 ? System::o1 : System::o1plus);
  TruncationPolicy pol = TruncationPolicy::total(4, N);
  FrobeniusBasis basis = frobenius_basis(sys, pol);
  MultiSeries w0inv = basis.w0.invert_unit();
  // X_i = sum_j P_ij (L_j + s_j), s_j = (w1_j - w0 L_j)/w0
  std::vector<LogSeries> X;
  for (int i = 0; i < 4; ++i) {
    LogSeries xi(pol);
    for (int j = 0; j < 4; ++j) {
      const Rat& p = sys.gram_p[i][j];
      if (p == 0) continue;
      LogSeries lj(pol);
      lj.add(LogKey::unit(j), MultiSeries::constant(pol, Coefficient(1)));
      LogSeries sj(basis.w1[j].plain_part() * w0inv);
      xi = xi + (lj + sj).scaled(Coefficient(p));
    }
    X.push_back(xi);
  }
  LogSeries w2_over_w0(pol);
  for (const auto& [k, f] : basis.w2.components()) w2_over_w0.add(k, f * w0inv);
  LogSeries acc = w2_over_w0.scaled(Coefficient(2));
  acc = acc + LogSeries(MultiSeries::constant(pol, Coefficient::varpi(2)));
  acc = acc + (X[0] * X[1]).scaled(Coefficient(4)) - (X[2] * X[2]).scaled(Coefficient(2)) -
        (X[3] * X[3]).scaled(Coefficient(2));
  if (!acc.is_zero_through(N - 1))
    rep.fail("transported quadratic relation", "nonvanishing combination");
  return rep;
}

bool branch_shift_consistent() {
  // q_j = (-1)^(j==4) prod_k Q_k^(P_jk) must reproduce the dictionary
  PFSystem sys = pf_system(System::o1);
  std::array<SignedMonomial, 4> dict = side_dictionary(Side::o1, {1, 1, 1, 1});
  // invert the dictionary: it maps Q -> q-exponents; build q -> Q-exponents
  // directly from P and compare after inversion instead
  for (int j = 0; j < 4; ++j) {
    Exp qexp; // exponent vector of q_j in the Q variables
    for (int k = 0; k < 4; ++k) qexp.q[k] = (int32_t)(4 * to_long(sys.gram_p[j][k]));
    Rat sign = (j == 3) ? -1 : 1;
    // map through the dictionary: q_j = prod_k (dict_k)^(P_jk)
    Exp image;
    Rat s = sign;
    for (int k = 0; k < 4; ++k) {
      long p = to_long(sys.gram_p[j][k]);
      s *= pow_rat(dict[k].first, p);
      image = image + dict[k].second.scaled(p);
    }
    Exp expect;
    expect.q[j] = 4;
    if (!(image == expect && s == 1)) return false;
  }
  return true;
}

} // namespace k3
