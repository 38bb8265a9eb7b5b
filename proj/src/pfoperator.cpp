#include "k3lambda/logseries.hpp"

namespace k3 {

LogSeries PFOperator::apply(const LogSeries& s) const {
  LogSeries out(s.policy());
  for (const auto& t : terms) {
    LogSeries v = s;
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) v = it->apply(v);
    LogSeries shifted(s.policy());
    for (const auto& [k, f] : v.components()) shifted.add(k, f.mul_monomial(t.coef, t.mono));
    out = out + shifted;
  }
  return out;
}

Poly expand_theta_poly(const std::vector<LinForm>& factors, const Rat& coef) {
  Poly p = Poly::constant(max_arity, coef);
  for (const auto& f : factors) {
    Poly lin = Poly::constant(max_arity, f.c);
    for (int i = 0; i < max_arity; ++i)
      if (f.a[i] != 0) lin.add(Exp::from_ints({i == 0, i == 1, i == 2, i == 3}), f.a[i]);
    p = p * lin;
  }
  return p;
}

Poly PFOperator::initial_term() const {
  Poly p = Poly::zero(max_arity);
  for (const auto& t : terms)
    if (t.mono.is_origin()) p = p + expand_theta_poly(t.factors, t.coef);
  long deg = -1;
  for (const auto& [e, c] : p.terms) {
    long d = (e.q[0] + e.q[1] + e.q[2] + e.q[3]) / 4;
    if (deg < 0) deg = d;
    if (d != deg) throw SeriesError("initial term not homogeneous");
  }
  if (deg != 2) throw SeriesError("initial term not of degree 2");
  return p;
}

PFOperator PFOperator::transported(
    const std::array<std::array<int, max_arity>, max_arity>& logmap,
    const std::vector<SignedMonomial>& old_in_new) const {
  PFOperator out;
  out.arity = arity;
  for (const auto& t : terms) {
    PFTerm nt;
    nt.coef = t.coef;
    // z^mono in old coordinates as a signed monomial in the new ones
    Exp img;
    Rat sign = 1;
    for (int i = 0; i < arity; ++i) {
      if (t.mono.q[i] == 0) continue;
      long n = t.mono.q[i] / 4;
      sign *= pow_rat(old_in_new[i].first, n);
      img = img + old_in_new[i].second.scaled(n);
    }
    nt.coef *= sign;
    nt.mono = img;
    for (const auto& f : t.factors) {
      LinForm nf;
      nf.c = f.c;
      // theta_old_i = sum_j logmap[i][j] theta_new_j
      for (int j = 0; j < max_arity; ++j) {
        Rat s = 0;
        for (int i = 0; i < max_arity; ++i) s += f.a[i] * logmap[i][j];
        nf.a[j] = s;
      }
      nt.factors.push_back(nf);
    }
    out.terms.push_back(nt);
  }
  return out;
}

namespace {
// canonical expanded form: monomial -> theta polynomial
std::map<Exp, Poly> expanded(const PFOperator& op) {
  std::map<Exp, Poly> m;
  for (const auto& t : op.terms) {
    Poly p = expand_theta_poly(t.factors, t.coef);
    auto it = m.find(t.mono);
    if (it == m.end())
      m.emplace(t.mono, p);
    else
      it->second = it->second + p;
  }
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
  return m;
}
} // namespace

PFOperator PFOperator::normalized() const { return *this; }

bool PFOperator::same_up_to_scalar(const PFOperator& o) const {
  auto a = expanded(*this), b = expanded(o);
  if (a.size() != b.size() || a.empty()) return a.empty() && b.empty();
  if (a.begin()->first != b.begin()->first) return false;
  const Poly& pa = a.begin()->second;
  const Poly& pb = b.begin()->second;
  if (pa.terms.empty() || pb.terms.empty()) return false;
  if (pa.terms.begin()->first != pb.terms.begin()->first) return false;
  Rat scale = pa.terms.begin()->second / pb.terms.begin()->second;
  for (auto ita = a.begin(), itb = b.begin(); ita != a.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    Poly scaledb = itb->second;
    for (auto& [e, c] : scaledb.terms) c *= scale;
    if (!(ita->second == scaledb)) return false;
  }
  return true;
}

} // namespace k3
