#include "k3lambda/gkz.hpp"

#include <sstream>

namespace k3 {

namespace {
GFactor gf(int a1, int a2, int a3, int a4, const Rat& cst) {
  GFactor f;
  f.a = {a1, a2, a3, a4};
  f.cst = cst;
  return f;
}

std::string nvec_str(const NVec& n) {
  std::ostringstream os;
  os << "(" << n[0] << "," << n[1] << "," << n[2] << "," << n[3] << ")";
  return os.str();
}
} // namespace

GKZScheme scheme(Scheme tag) {
  GKZScheme s;
  s.tag = tag;
  Rat h = rat(1, 2);
  switch (tag) {
    case Scheme::o1:
      s.nums = {gf(1, 0, 0, 0, h), gf(0, 1, 0, 0, h), gf(0, 0, 1, 0, h)};
      s.dens = {gf(-1, 0, 0, 1, 1), gf(0, -1, 0, 1, 1), gf(0, 0, -1, 1, 1),
                gf(1, 1, 0, -1, 1), gf(1, 0, 1, -1, 1), gf(0, 1, 1, -1, 1)};
      break;
    case Scheme::o1plus:
      s.nums = {gf(1, 1, -1, -1, h), gf(0, 0, 1, 0, h), gf(0, 0, 0, 1, h)};
      s.dens = {gf(1, 0, -1, 0, 1), gf(1, 0, 0, -1, 1), gf(0, 1, -1, 0, 1),
                gf(0, 1, 0, -1, 1), gf(-1, 0, 1, 1, 1), gf(0, -1, 1, 1, 1)};
      break;
    case Scheme::yoshida:
      s.nums = {gf(1, 0, 1, 0, h), gf(0, 1, 0, 1, h), gf(1, 1, 0, 0, h), gf(0, 0, 1, 1, h)};
      s.dens = {gf(1, 1, 1, 1, rat(3, 2)), gf(1, 0, 0, 0, 1), gf(0, 1, 0, 0, 1),
                gf(0, 0, 1, 0, 1), gf(0, 0, 0, 1, 1)};
      break;
  }
  return s;
}

bool GKZScheme::on_support(const NVec& n) const {
  for (const auto& f : dens)
    if (f.arg_num_times2(n) <= 0) return false;
  for (const auto& f : nums) {
    long v2 = f.arg_num_times2(n);
    if (v2 % 2 == 0 && v2 <= 0) return false;
  }
  return true;
}

RhoJet GKZScheme::jet(const NVec& n) const {
  RhoJet j = RhoJet::one();
  int halves = 0;
  for (const auto& f : nums) {
    int hp = 0;
    j = j * gamma_factor_jet(f, n, true, hp);
    halves += hp;
  }
  for (const auto& f : dens) {
    int hp = 0;
    j = j * gamma_factor_jet(f, n, false, hp);
    halves += hp;
  }
  if (halves != half_norm) throw std::domain_error("Gamma(1/2) powers fail to cancel");
  return j;
}

Rat gkz_coeff(const GKZScheme& s, const NVec& n) {
  Coefficient c = s.jet(n).c0.to_coefficient();
  if (!c.is_rational()) throw std::domain_error("c(n) not rational");
  return c.rational_part();
}

Coefficient rho_derivative(const GKZScheme& s, const NVec& n, int i) {
  return s.jet(n).c1[i].to_coefficient();
}

Coefficient rho_derivative2(const GKZScheme& s, const NVec& n, int i, int j) {
  RhoJet jt = s.jet(n);
  GammaPoly g = jt.c2[RhoJet::pair_index(i, j)];
  Rat mult = (i == j) ? 2 : 1; // d2/dx2 of c x^2 is 2c
  return g.scaled(mult).to_coefficient();
}

namespace {
PFOperator make_op(const Rat& c2, std::initializer_list<int> mono, LinForm f1, LinForm f2,
                   LinForm g1, LinForm g2) {
  PFOperator op;
  PFTerm t0;
  t0.coef = 1;
  t0.factors = {f1, f2};
  PFTerm t1;
  t1.coef = c2;
  {
    Exp e;
    int i = 0;
    for (int v : mono) e.q[i++] = 4 * v;
    t1.mono = e;
  }
  t1.factors = {g1, g2};
  op.terms = {t0, t1};
  return op;
}

Mat4 mat4(std::initializer_list<std::initializer_list<long>> rows) {
  Mat4 m;
  int i = 0;
  for (auto& r : rows) {
    int j = 0;
    for (long v : r) m[i][j++] = Rat(v);
    ++i;
  }
  return m;
}
} // namespace

PFSystem pf_system(System tag) {
  PFSystem sys;
  sys.tag = tag;
  Rat h = rat(1, 2);
  Mat4 blocks = mat4({{0, 2, 0, 0}, {2, 0, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}});
  switch (tag) {
    case System::o1: {
      sys.coeffs = Scheme::o1;
      sys.ops = {
          make_op(1, {1, 0, 0, 0}, lf(1, 1, 0, -1), lf(1, 0, 1, -1), lf(1, 0, 0, 0, h),
                  lf(1, 0, 0, -1)),
          make_op(1, {0, 1, 0, 0}, lf(1, 1, 0, -1), lf(0, 1, 1, -1), lf(0, 1, 0, 0, h),
                  lf(0, 1, 0, -1)),
          make_op(1, {0, 0, 1, 0}, lf(1, 0, 1, -1), lf(0, 1, 1, -1), lf(0, 0, 1, 0, h),
                  lf(0, 0, 1, -1)),
          make_op(-1, {1, 0, 0, 1}, lf(0, 1, 0, -1), lf(0, 0, 1, -1), lf(1, 0, 0, 0, h),
                  lf(0, 1, 1, -1)),
          make_op(-1, {0, 1, 0, 1}, lf(1, 0, 0, -1), lf(0, 0, 1, -1), lf(0, 1, 0, 0, h),
                  lf(1, 0, 1, -1)),
          make_op(-1, {0, 0, 1, 1}, lf(1, 0, 0, -1), lf(0, 1, 0, -1), lf(0, 0, 1, 0, h),
                  lf(1, 1, 0, -1)),
          make_op(1, {1, 1, 0, 1}, lf(1, 1, 0, -1), lf(0, 0, 1, -1), lf(1, 0, 0, 0, h),
                  lf(0, 1, 0, 0, h)),
          make_op(1, {1, 0, 1, 1}, lf(1, 0, 1, -1), lf(0, 1, 0, -1), lf(1, 0, 0, 0, h),
                  lf(0, 0, 1, 0, h)),
          make_op(1, {0, 1, 1, 1}, lf(0, 1, 1, -1), lf(1, 0, 0, -1), lf(0, 1, 0, 0, h),
                  lf(0, 0, 1, 0, h)),
      };
      sys.pairing = mat4({{0, 2, 2, 2}, {2, 0, 2, 2}, {2, 2, 0, 2}, {2, 2, 2, 2}});
      sys.gram_p = mat4({{1, 0, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 1, 0}});
      sys.gram_blocks = blocks;
      break;
    }
    case System::o1plus: {
      sys.coeffs = Scheme::o1plus;
      sys.ops = {
          make_op(1, {1, 0, 0, 0}, lf(1, 0, -1, 0), lf(1, 0, 0, -1), lf(1, 0, -1, -1),
                  lf(1, 1, -1, -1, h)),
          make_op(1, {0, 1, 0, 0}, lf(0, 1, -1, 0), lf(0, 1, 0, -1), lf(0, 1, -1, -1),
                  lf(1, 1, -1, -1, h)),
          make_op(1, {1, 0, 1, 0}, lf(1, 0, 0, -1), lf(0, 1, -1, -1), lf(0, 1, -1, 0),
                  lf(0, 0, 1, 0, h)),
          make_op(1, {1, 0, 0, 1}, lf(1, 0, -1, 0), lf(0, 1, -1, -1), lf(0, 1, 0, -1),
                  lf(0, 0, 0, 1, h)),
          make_op(1, {0, 1, 1, 0}, lf(0, 1, 0, -1), lf(1, 0, -1, -1), lf(1, 0, -1, 0),
                  lf(0, 0, 1, 0, h)),
          make_op(1, {0, 1, 0, 1}, lf(0, 1, -1, 0), lf(1, 0, -1, -1), lf(1, 0, 0, -1),
                  lf(0, 0, 0, 1, h)),
          make_op(-1, {1, 1, 1, 0}, lf(1, 0, 0, -1), lf(0, 1, 0, -1), lf(0, 0, 1, 0, h),
                  lf(1, 1, -1, -1, h)),
          make_op(-1, {1, 1, 0, 1}, lf(1, 0, -1, 0), lf(0, 1, -1, 0), lf(0, 0, 0, 1, h),
                  lf(1, 1, -1, -1, h)),
          make_op(-1, {1, 1, 1, 1}, lf(1, 0, -1, -1), lf(0, 1, -1, -1), lf(0, 0, 1, 0, h),
                  lf(0, 0, 0, 1, h)),
      };
      sys.pairing = mat4({{2, 4, 2, 2}, {4, 2, 2, 2}, {2, 2, 0, 2}, {2, 2, 2, 0}});
      sys.gram_p = mat4({{1, 1, 0, 1}, {1, 1, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
      sys.gram_blocks = blocks;
      break;
    }
    default:
      throw SeriesError("pf_system: only o1 and o1plus carry stored systems");
  }
  return sys;
}

CoordinateChange coordinate_change(System target) {
  CoordinateChange cc;
  auto mono = [](long a, long b, long c, long d) {
    return SignedMonomial{1, Exp::from_ints({(int)a, (int)b, (int)c, (int)d})};
  };
  switch (target) {
    case System::o2:
      // u_k = z_k z_4 (k<=3), u_4 = 1/z_4  =>  z_k = u_k u_4, z_4 = 1/u_4
      cc.base_in_other = {mono(1, 0, 0, 1), mono(0, 1, 0, 1), mono(0, 0, 1, 1),
                          mono(0, 0, 0, -1)};
      cc.logmap = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, -1}}};
      break;
    case System::o2plus:
      // u_1 = t_1 t_4, u_2 = t_2 t_4, u_3 = t_3/t_4, u_4 = 1/t_4
      cc.base_in_other = {mono(1, 0, 0, 1), mono(0, 1, 0, 1), mono(0, 0, 1, -1),
                          mono(0, 0, 0, -1)};
      cc.logmap = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, -1, -1}}};
      break;
    case System::o3plus:
      // u_1 = t_1 t_3, u_2 = t_2 t_3, u_3 = t_4/t_3, u_4 = 1/t_3
      cc.base_in_other = {mono(1, 0, 0, 1), mono(0, 1, 0, 1), mono(0, 0, 0, -1),
                          mono(0, 0, 1, -1)};
      cc.logmap = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, -1, -1}, {0, 0, 1, 0}}};
      break;
    default:
      throw SeriesError("coordinate_change: base systems have no change");
  }
  return cc;
}

FrobeniusBasis frobenius_basis(const PFSystem& sys, const TruncationPolicy& pol) {
  GKZScheme sch = scheme(sys.coeffs);
  long N = pol.primary.cutoff;
  FrobeniusBasis basis(pol);
  std::vector<LogSeries> w1(4, LogSeries(pol));
  LogSeries w2(pol);
  MultiSeries w0(pol);
  MultiSeries w2_plain(pol);
  std::vector<MultiSeries> w1_plain(4, MultiSeries(pol));
  std::vector<MultiSeries> w2_single(4, MultiSeries(pol));

  NVec n;
  for (n[0] = 0; n[0] <= N; ++n[0])
    for (n[1] = 0; n[0] + n[1] <= N; ++n[1])
      for (n[2] = 0; n[0] + n[1] + n[2] <= N; ++n[2])
        for (n[3] = 0; n[0] + n[1] + n[2] + n[3] <= N; ++n[3]) {
          RhoJet jet = sch.jet(n);
          Exp e = Exp::from_ints({(int)n[0], (int)n[1], (int)n[2], (int)n[3]});
          Coefficient c = jet.c0.to_coefficient();
          if (!c.is_zero()) w0.add_term(e, c);
          std::array<Coefficient, 4> d1;
          for (int i = 0; i < 4; ++i) {
            d1[i] = jet.c1[i].to_coefficient();
            if (!d1[i].is_zero()) w1_plain[i].add_term(e, d1[i]);
          }
          // M-weighted second derivative and the single-log parts of w2
          Coefficient dd;
          std::array<Coefficient, 4> md;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
              const Rat& m = sys.pairing[i][j];
              if (m == 0) continue;
              GammaPoly g = jet.c2[RhoJet::pair_index(i, j)];
              Rat mult = (i == j) ? 2 : 1;
              Coefficient second = g.scaled(mult * m).to_coefficient();
              dd += second;
              Coefficient t = d1[j];
              t *= m;
              md[i] += t;
            }
          if (!dd.is_zero()) w2_plain.add_term(e, dd);
          for (int i = 0; i < 4; ++i)
            if (!md[i].is_zero()) w2_single[i].add_term(e, md[i]);
        }

  basis.w0 = w0;
  for (int i = 0; i < 4; ++i) {
    LogSeries s(pol);
    s.add(LogKey{}, w1_plain[i]);
    s.add(LogKey::unit(i), w0);
    w1[i] = s;
  }
  // w2 = -1/2 [ sum M d2 c + 2 sum_i (sum_j M_ij d_j c) L_i + c sum M_ij L_i L_j ]
  {
    LogSeries s(pol);
    s.add(LogKey{}, w2_plain);
    for (int i = 0; i < 4; ++i) s.add(LogKey::unit(i), w2_single[i].scaled(Coefficient(2)));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const Rat& m = sys.pairing[i][j];
        if (m == 0) continue;
        s.add(LogKey::unit(i) + LogKey::unit(j), w0.scaled(Coefficient(m)));
      }
    w2 = s.scaled(Coefficient(rat(-1, 2)));
  }
  basis.w1 = w1;
  basis.w2 = w2;
  return basis;
}

CheckReport verify_annihilation(const PFSystem& sys, const FrobeniusBasis& basis, long through) {
  CheckReport rep;
  std::vector<std::pair<std::string, LogSeries>> sols;
  sols.emplace_back("w0", LogSeries(basis.w0));
  for (int i = 0; i < 4; ++i)
    sols.emplace_back("w1_" + std::to_string(i + 1), basis.w1[i]);
  sols.emplace_back("w2", basis.w2);
  for (size_t k = 0; k < sys.ops.size(); ++k)
    for (const auto& [name, sol] : sols) {
      LogSeries r = sys.ops[k].apply(sol);
      if (!r.is_zero_through(through))
        rep.fail("D" + std::to_string(k + 1) + " on " + name,
                 "nonzero residue inside degree " + std::to_string(through));
    }
  return rep;
}

CheckReport verify_quadratic_relation(const PFSystem& sys, const FrobeniusBasis& basis,
                                      const Rat& d, long through) {
  CheckReport rep;
  LogSeries w0(basis.w0);
  LogSeries acc = (basis.w2.scaled(Coefficient(2)) +
                   w0.scaled(Coefficient::varpi(d))) *
                  w0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Rat& m = sys.pairing[i][j];
      if (m == 0) continue;
      acc = acc + (basis.w1[i] * basis.w1[j]).scaled(Coefficient(m));
    }
  if (!acc.is_zero_through(through))
    rep.fail("quadratic relation d=" + to_string(d),
             "nonvanishing inside degree " + std::to_string(through));
  return rep;
}

CheckReport verify_operator_transport(System which) {
  CheckReport rep;
  System base = (which == System::o2) ? System::o1 : System::o1plus;
  PFSystem sys = pf_system(base);
  CoordinateChange cc = coordinate_change(which);
  for (size_t k = 0; k < sys.ops.size(); ++k) {
    PFOperator t = sys.ops[k].transported(cc.logmap, cc.base_in_other);
    bool matched = false;
    for (const auto& op : sys.ops)
      if (t.same_up_to_scalar(op)) {
        matched = true;
        break;
      }
    if (!matched)
      rep.fail("transport D" + std::to_string(k + 1),
               "image not in the stored operator set (up to scalar)");
  }
  return rep;
}

LaurentWitness yoshida_laurent_witness(long box) {
  LaurentWitness w;
  GKZScheme yos = scheme(Scheme::yoshida);
  GKZScheme o1s = scheme(Scheme::o1);
  PFSystem sys = pf_system(System::o1);
  NVec n;
  for (n[0] = -box; n[0] <= box; ++n[0])
    for (n[1] = -box; n[1] <= box; ++n[1])
      for (n[2] = -box; n[2] <= box; ++n[2])
        for (n[3] = -box; n[3] <= box; ++n[3]) {
          bool negative = n[0] < 0 || n[1] < 0 || n[2] < 0 || n[3] < 0;
          if (!negative) continue;
          Coefficient y = rho_derivative(yos, n, 0);
          if (!y.is_zero() && !w.found) {
            w.found = true;
            w.at = n;
            if (!y.is_rational()) throw std::domain_error("witness value not rational");
            w.value = y.rational_part();
          }
          RhoJet jo = o1s.jet(n);
          if (!jo.c1[0].to_coefficient().is_zero()) w.o1_first_clean = false;
          Coefficient md;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
              const Rat& m = sys.pairing[i][j];
              if (m == 0) continue;
              Rat mult = (i == j) ? 2 : 1;
              Coefficient t = jo.c2[RhoJet::pair_index(i, j)].scaled(mult).to_coefficient();
              if (!t.is_zero()) w.o1_unweighted_dirty = true;
              t *= m;
              md += t;
            }
          if (!md.is_zero()) w.o1_weighted_clean = false;
        }
  return w;
}

} // namespace k3
