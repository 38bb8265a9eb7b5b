#include "k3lambda/logseries.hpp"

namespace k3 {

void LogSeries::add(const LogKey& k, const MultiSeries& f) {
  if (k.total() > 2) throw SeriesError("log degree above 2");
  if (f.is_zero()) return;
  auto it = comps_.find(k);
  if (it == comps_.end()) {
    MultiSeries g = f.restricted(pol_);
    if (!g.is_zero()) comps_.emplace(k, std::move(g));
  } else {
    it->second = it->second + f;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

LogSeries LogSeries::operator+(const LogSeries& o) const {
  LogSeries out(TruncationPolicy::meet(pol_, o.pol_));
  for (const auto& [k, f] : comps_) out.add(k, f);
  for (const auto& [k, f] : o.comps_) out.add(k, f);
  return out;
}

LogSeries LogSeries::operator-(const LogSeries& o) const {
  LogSeries out(TruncationPolicy::meet(pol_, o.pol_));
  for (const auto& [k, f] : comps_) out.add(k, f);
  for (const auto& [k, f] : o.comps_) out.add(k, -f);
  return out;
}

LogSeries LogSeries::operator-() const {
  LogSeries out(pol_);
  for (const auto& [k, f] : comps_) out.add(k, -f);
  return out;
}

LogSeries LogSeries::operator*(const LogSeries& o) const {
  LogSeries out(TruncationPolicy::meet(pol_, o.pol_));
  for (const auto& [ka, fa] : comps_)
    for (const auto& [kb, fb] : o.comps_) out.add(ka + kb, fa * fb);
  return out;
}

LogSeries LogSeries::scaled(const Coefficient& c) const {
  LogSeries out(pol_);
  for (const auto& [k, f] : comps_) out.add(k, f.scaled(c));
  return out;
}

LogSeries LogSeries::mul_series(const MultiSeries& g) const {
  LogSeries out(TruncationPolicy::meet(pol_, g.policy()));
  for (const auto& [k, f] : comps_) out.add(k, f * g);
  return out;
}

LogSeries LogSeries::euler_theta(int i) const {
  LogSeries out(pol_);
  for (const auto& [k, f] : comps_) {
    out.add(k, f.euler_theta(i));
    if (k.d[i] > 0) {
      LogKey down = k;
      down.d[i] -= 1;
      out.add(down, f.scaled(Coefficient(Rat((long)k.d[i]))));
    }
  }
  return out;
}

bool LogSeries::is_zero_through(long n) const {
  for (const auto& [k, f] : comps_)
    for (const auto& [e, c] : f.terms())
      if (pol_.primary.quarters(e) <= 4 * n && !c.is_zero()) return false;
  return true;
}

LogSeries LinForm::apply(const LogSeries& s) const {
  LogSeries out = s.scaled(Coefficient(c));
  for (int i = 0; i < max_arity; ++i)
    if (a[i] != 0) out = out + s.euler_theta(i).scaled(Coefficient(a[i]));
  return out;
}

} // namespace k3
