#include "k3lambda/series.hpp"

#include <algorithm>

namespace k3 {

void TruncationPolicy::validate() const {
  if (arity < 1 || arity > max_arity) throw SeriesError("arity out of range");
  bool pos = false;
  for (int i = 0; i < arity; ++i) {
    if (primary.weights[i] < 0) throw SeriesError("negative grading weight");
    pos |= primary.weights[i] > 0;
  }
  if (!pos) throw SeriesError("policy needs a positively weighted variable");
  if (window && *window < 0) throw SeriesError("negative window");
  if (extra)
    for (int i = 0; i < arity; ++i)
      if (extra->weights[i] < 0) throw SeriesError("negative extra weight");
}

bool TruncationPolicy::keeps(const Exp& e) const {
  for (int i = arity; i < max_arity; ++i)
    if (e.q[i] != 0) throw SeriesError("exponent beyond arity");
  if (!primary.keeps(e)) return false;
  if (window)
    for (int i = 0; i < arity; ++i)
      if (primary.weights[i] == 0 && std::abs(e.q[i]) > 4 * *window) return false;
  if (extra && !extra->keeps(e)) return false;
  return true;
}

TruncationPolicy TruncationPolicy::meet(const TruncationPolicy& a, const TruncationPolicy& b) {
  if (a.arity != b.arity) throw SeriesError("arity mismatch");
  if (a.primary.weights != b.primary.weights)
    throw SeriesError("incompatible policies: primary gradings differ");
  TruncationPolicy m = a;
  m.primary.cutoff = std::min(a.primary.cutoff, b.primary.cutoff);
  if (a.window && b.window)
    m.window = std::min(*a.window, *b.window);
  else
    m.window = a.window ? a.window : b.window;
  if (a.extra && b.extra) {
    if (a.extra->weights != b.extra->weights)
      throw SeriesError("incompatible policies: extra gradings differ");
    m.extra = *a.extra;
    m.extra->cutoff = std::min(a.extra->cutoff, b.extra->cutoff);
  } else {
    m.extra = a.extra ? a.extra : b.extra;
  }
  return m;
}

void MultiSeries::add_term(const Exp& e, const Coefficient& c) {
  if (c.is_zero() || !pol_.keeps(e)) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
  MultiSeries out(TruncationPolicy::meet(pol_, o.pol_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiSeries MultiSeries::operator-(const MultiSeries& o) const {
  MultiSeries out(TruncationPolicy::meet(pol_, o.pol_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries out(pol_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
  MultiSeries out(TruncationPolicy::meet(pol_, o.pol_));
  const MultiSeries& small = size() <= o.size() ? *this : o;
  const MultiSeries& big = size() <= o.size() ? o : *this;
  for (const auto& [ea, ca] : small.terms_)
    for (const auto& [eb, cb] : big.terms_) {
      Exp e = ea + eb;
      if (!out.pol_.keeps(e)) continue;
      Coefficient prod = ca * cb;
      if (prod.is_zero()) continue;
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_.emplace(e, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  return out;
}

MultiSeries MultiSeries::scaled(const Coefficient& c) const {
  MultiSeries out(pol_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : terms_) out.add_term(e, x * c);
  return out;
}

MultiSeries MultiSeries::mul_monomial(const Rat& c, const Exp& m) const {
  MultiSeries out(pol_);
  if (c == 0) return out;
  for (const auto& [e, x] : terms_) {
    Coefficient y = x;
    y *= c;
    out.add_term(e + m, y);
  }
  return out;
}

MultiSeries MultiSeries::restricted(const TruncationPolicy& pol) const {
  MultiSeries out(pol);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

MultiSeries MultiSeries::boxed(long n, long w) const {
  MultiSeries out(pol_);
  for (const auto& [e, c] : terms_) {
    if (pol_.primary.quarters(e) > 4 * n) continue;
    bool ok = true;
    for (int i = 0; i < pol_.arity; ++i)
      if (pol_.primary.weights[i] == 0 && std::abs(e.q[i]) > 4 * w) ok = false;
    if (ok) out.add_term(e, c);
  }
  return out;
}

long MultiSeries::geometric_bound() const {
  // Upper bound on how many powers of a positive-grade series can survive
  // truncation; used to cap exp/log/sqrt/inversion loops.
  long b = 4 * (pol_.primary.cutoff + 1);
  if (pol_.window) b += 8 * pol_.arity * (*pol_.window + 1);
  if (pol_.extra) b += 4 * (pol_.extra->cutoff + 1);
  return std::max(b, 8L);
}

MultiSeries MultiSeries::invert_unit() const {
  Coefficient c0 = constant_term();
  if (c0.is_zero() || !c0.is_rational())
    throw SeriesError("invert_unit: constant term not an invertible rational");
  Rat inv = 1 / c0.rational_part();
  // u = c0 (1 + v); 1/u = (1/c0) sum (-v)^k
  MultiSeries v = scaled(Coefficient(inv));
  v.terms_.erase(Exp{});
  MultiSeries acc = MultiSeries::constant(pol_, Coefficient(1));
  MultiSeries pw = MultiSeries::constant(pol_, Coefficient(1));
  long bound = geometric_bound();
  for (long k = 1; k <= bound; ++k) {
    pw = pw * v;
    if (pw.is_zero()) break;
    acc = (k % 2) ? acc - pw : acc + pw;
  }
  if (!pw.is_zero()) throw SeriesError("invert_unit: series does not terminate");
  return acc.scaled(Coefficient(inv));
}

MultiSeries MultiSeries::exp_series() const {
  if (!constant_term().is_zero()) throw SeriesError("exp: nonzero constant term");
  MultiSeries acc = MultiSeries::constant(pol_, Coefficient(1));
  MultiSeries pw = MultiSeries::constant(pol_, Coefficient(1));
  Rat fact = 1;
  long bound = geometric_bound();
  for (long k = 1; k <= bound; ++k) {
    pw = pw * *this;
    if (pw.is_zero()) break;
    fact *= k;
    acc = acc + pw.scaled(Coefficient(1 / fact));
  }
  if (!pw.is_zero()) throw SeriesError("exp: series does not terminate");
  return acc;
}

MultiSeries MultiSeries::log_series() const {
  Coefficient c0 = constant_term();
  if (!(c0.is_rational() && c0.rational_part() == 1))
    throw SeriesError("log: constant term must be 1");
  MultiSeries v = *this;
  v.terms_.erase(Exp{});
  MultiSeries acc(pol_);
  MultiSeries pw = MultiSeries::constant(pol_, Coefficient(1));
  long bound = geometric_bound();
  for (long k = 1; k <= bound; ++k) {
    pw = pw * v;
    if (pw.is_zero()) break;
    Rat c = rat(k % 2 ? 1 : -1, k);
    acc = acc + pw.scaled(Coefficient(c));
  }
  if (!pw.is_zero()) throw SeriesError("log: series does not terminate");
  return acc;
}

MultiSeries MultiSeries::sqrt_with_leading(const SignedMonomial& leading) const {
  const auto& [lc, le] = leading;
  if (lc == 0) throw SeriesError("sqrt: zero leading monomial");
  // u := a / leading^2 must be a unit series with constant term 1.
  MultiSeries u = mul_monomial(1 / (lc * lc), Exp{} - le - le);
  Coefficient c0 = u.constant_term();
  if (!(c0.is_rational() && c0.rational_part() == 1))
    throw SeriesError("sqrt: input is not leading^2 * (1 + higher)");
  MultiSeries v = u;
  v.terms_.erase(Exp{});
  // binomial series (1+v)^(1/2)
  MultiSeries acc = MultiSeries::constant(pol_, Coefficient(1));
  MultiSeries pw = MultiSeries::constant(pol_, Coefficient(1));
  Rat binom = 1;
  long bound = geometric_bound();
  for (long k = 1; k <= bound; ++k) {
    pw = pw * v;
    if (pw.is_zero()) break;
    binom *= rat(3 - 2 * k, 2 * k); // C(1/2,k) = C(1/2,k-1)*(1/2-k+1)/k
    acc = acc + pw.scaled(Coefficient(binom));
  }
  if (!pw.is_zero()) throw SeriesError("sqrt: series does not terminate");
  return acc.mul_monomial(lc, le);
}

MultiSeries MultiSeries::substitute_monomials(const std::vector<SignedMonomial>& images,
                                              const TruncationPolicy& target) const {
  if ((int)images.size() != pol_.arity) throw SeriesError("substitute: image count != arity");
  for (const auto& [c, e] : images)
    if (c != 1 && c != -1) throw SeriesError("substitute: images must be signed monomials");
  MultiSeries out(target);
  for (const auto& [e, c] : terms_) {
    // exponents combine in sixteenth units; require the result back in quarters
    std::array<int64_t, max_arity> acc{0, 0, 0, 0};
    bool neg = false;
    for (int i = 0; i < pol_.arity; ++i) {
      if (e.q[i] == 0) continue;
      const auto& [sc, im] = images[i];
      if (sc < 0) {
        if (e.q[i] % 4 != 0) throw SeriesError("substitute: sign under fractional exponent");
        if ((e.q[i] / 4) % 2 != 0) neg = !neg;
      }
      for (int j = 0; j < max_arity; ++j) acc[j] += (int64_t)e.q[i] * im.q[j];
    }
    Exp img;
    for (int j = 0; j < max_arity; ++j) {
      if (acc[j] % 4 != 0) throw SeriesError("substitute: exponent denominator exceeds 4");
      int64_t v = acc[j] / 4;
      if (v > INT32_MAX || v < INT32_MIN) throw SeriesError("substitute: exponent overflow");
      img.q[j] = (int32_t)v;
    }
    out.add_term(img, neg ? -c : c);
  }
  return out;
}

MultiSeries MultiSeries::euler_theta(int i) const {
  MultiSeries out(pol_);
  for (const auto& [e, c] : terms_) {
    if (e.q[i] == 0) continue;
    Coefficient x = c;
    x *= rat(e.q[i], 4);
    out.terms_.emplace(e, std::move(x));
  }
  return out;
}

MultiSeries MultiSeries::deriv(int i) const {
  MultiSeries out(pol_);
  Exp down;
  down.q[i] = -4;
  for (const auto& [e, c] : terms_) {
    if (e.q[i] == 0) continue;
    Coefficient x = c;
    x *= rat(e.q[i], 4);
    out.add_term(e + down, x);
  }
  return out;
}

bool MultiSeries::all_coeffs_rational() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b.terms) out.add(e, c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b.terms) out.add(e, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out{a.arity, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) out.add(ea + eb, ca * cb);
  return out;
}

Rat Poly::eval(const std::vector<Rat>& x) const {
  Rat acc = 0;
  for (const auto& [e, c] : terms) {
    Rat t = c;
    for (int i = 0; i < arity; ++i) {
      if (e.q[i] % 4 != 0) throw SeriesError("Poly::eval: fractional exponent");
      t *= pow_rat(x[i], e.q[i] / 4);
    }
    acc += t;
  }
  return acc;
}

Poly Poly::substitute_monomials(const std::vector<SignedMonomial>& images, int out_arity) const {
  Poly out{out_arity, {}};
  for (const auto& [e, c] : terms) {
    Exp img;
    Rat coef = c;
    for (int i = 0; i < arity; ++i) {
      if (e.q[i] == 0) continue;
      if (e.q[i] % 4 != 0) throw SeriesError("Poly substitution: fractional exponent");
      coef *= pow_rat(images[i].first, e.q[i] / 4);
      img = img + images[i].second.scaled(e.q[i] / 4);
    }
    out.add(img, coef);
  }
  return out;
}

MultiSeries compose_poly(const Poly& p, const std::vector<MultiSeries>& args) {
  if ((int)args.size() != p.arity) throw SeriesError("compose_poly: arity mismatch");
  TruncationPolicy pol = args.empty() ? TruncationPolicy::total(1, 0) : args[0].policy();
  for (const auto& a : args) pol = TruncationPolicy::meet(pol, a.policy());
  // cache powers of each argument up to what p uses
  std::vector<std::vector<MultiSeries>> powers(args.size());
  for (size_t i = 0; i < args.size(); ++i)
    powers[i].push_back(MultiSeries::constant(pol, Coefficient(1)));
  auto power = [&](size_t i, long n) -> const MultiSeries& {
    while ((long)powers[i].size() <= n) powers[i].push_back(powers[i].back() * args[i]);
    return powers[i][n];
  };
  MultiSeries out(pol);
  for (const auto& [e, c] : p.terms) {
    MultiSeries t = MultiSeries::constant(pol, Coefficient(c));
    for (int i = 0; i < p.arity; ++i) {
      if (e.q[i] == 0) continue;
      if (e.q[i] % 4 != 0 || e.q[i] < 0) throw SeriesError("compose_poly: bad exponent");
      t = t * power(i, e.q[i] / 4);
    }
    out = out + t;
  }
  return out;
}

std::vector<MultiSeries> solve_fixed_point(
    const std::vector<MultiSeries>& monomials,
    const std::function<std::vector<MultiSeries>(const std::vector<MultiSeries>&)>& S) {
  if (monomials.empty()) return {};
  std::vector<MultiSeries> z = monomials;
  long bound = z[0].geometric_bound() + 2;
  for (long it = 0; it < bound; ++it) {
    std::vector<MultiSeries> s = S(z);
    if (s.size() != z.size()) throw SeriesError("solve_fixed_point: arity mismatch");
    std::vector<MultiSeries> next;
    next.reserve(z.size());
    bool stable = true;
    for (size_t k = 0; k < z.size(); ++k) {
      for (const auto& [e, c] : s[k].terms())
        if (e.is_origin())
          throw SeriesError("solve_fixed_point: S has a constant term");
      next.push_back(monomials[k] * s[k].exp_series());
      stable &= next[k] == z[k];
    }
    z = std::move(next);
    if (stable) return z;
  }
  throw SeriesError("solve_fixed_point: non-contractive system");
}

} // namespace k3
