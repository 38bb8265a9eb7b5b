#include "k3lambda/gammajet.hpp"

namespace k3 {

Coefficient GammaPoly::to_coefficient() const {
  Coefficient out;
  for (const auto& [k, c] : t) {
    if (k[0] != 0) throw std::domain_error("gamma failed to cancel");
    out.set_part(k[1], k[2], out.part(k[1], k[2]) + c);
  }
  return out;
}

int RhoJet::pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  static const int base[4] = {0, 4, 7, 9}; // row starts of the packed upper triangle
  return base[i] + (j - i);
}

RhoJet operator*(const RhoJet& a, const RhoJet& b) {
  RhoJet out;
  out.c0 = a.c0 * b.c0;
  for (int i = 0; i < 4; ++i) {
    out.c1[i] = a.c0 * b.c1[i];
    out.c1[i] += a.c1[i] * b.c0;
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      int ij = RhoJet::pair_index(i, j);
      GammaPoly s = a.c0 * b.c2[ij];
      s += a.c2[ij] * b.c0;
      if (i == j) {
        s += a.c1[i] * b.c1[i];
      } else {
        s += a.c1[i] * b.c1[j];
        s += a.c1[j] * b.c1[i];
      }
      out.c2[ij] = s;
    }
  return out;
}

namespace {
bool is_half(const Rat& x) { return x.get_den() == 2; }
} // namespace

GammaPoly psi_value(const Rat& x) {
  GammaPoly p = GammaPoly::sym(1, 0, 0, -1); // -gamma
  if (is_half(x)) {
    p.add({0, 1, 0}, -2); // -2 kappa
    long m = to_long(x - rat(1, 2));
    if (m >= 0)
      for (long j = 1; j <= m; ++j) p.add({0, 0, 0}, rat(2, 2 * j - 1));
    else
      for (long k = 1; k <= -m; ++k) p.add({0, 0, 0}, rat(2, 2 * k - 1));
    return p;
  }
  long m = to_long(x) - 1;
  if (m < 0) throw std::domain_error("psi at a nonpositive integer");
  for (long k = 1; k <= m; ++k) p.add({0, 0, 0}, rat(1, k));
  return p;
}

GammaPoly psi_prime_value(const Rat& x) {
  GammaPoly p;
  if (is_half(x)) {
    p.add({0, 0, 1}, rat(1, 2)); // varpi/2
    long m = to_long(x - rat(1, 2));
    if (m >= 0)
      for (long j = 1; j <= m; ++j) p.add({0, 0, 0}, -4 * rat(1, (2 * j - 1)) * rat(1, (2 * j - 1)));
    else
      for (long k = 1; k <= -m; ++k) p.add({0, 0, 0}, 4 * rat(1, (2 * k - 1)) * rat(1, (2 * k - 1)));
    return p;
  }
  long m = to_long(x) - 1;
  if (m < 0) throw std::domain_error("psi' at a nonpositive integer");
  p.add({0, 0, 1}, rat(1, 6));
  for (long k = 1; k <= m; ++k) p.add({0, 0, 0}, -rat(1, k) * rat(1, k));
  return p;
}

Rat gamma_half_ratio(const Rat& x) {
  if (is_half(x)) {
    long m = to_long(x - rat(1, 2));
    Rat r = 1;
    if (m >= 0)
      for (long j = 1; j <= m; ++j) r *= rat(2 * j - 1, 2);
    else
      for (long k = 1; k <= -m; ++k) r *= rat(2, 1 - 2 * k);
    return r;
  }
  long v = to_long(x);
  if (v <= 0) throw std::domain_error("gamma at a nonpositive integer");
  return factorial(v - 1);
}

RhoJet gamma_factor_jet(const GFactor& f, const std::array<long, 4>& n, bool numerator,
                        int& halfpow) {
  Rat x = f.cst;
  for (int i = 0; i < 4; ++i) x += f.a[i] * n[i];
  RhoJet jet;
  bool half = is_half(x);
  halfpow = half ? (numerator ? 1 : -1) : 0;

  if (!half && x <= 0) {
    if (numerator) throw std::domain_error("numerator Gamma pole");
    // 1/Gamma(-k + delta) = (-1)^k k! (delta - psi(k+1) delta^2 + ...)
    long k = -to_long(x);
    Rat lead = (k % 2 ? -1 : 1) * factorial(k);
    GammaPoly psik = psi_value(Rat(k + 1));
    for (int i = 0; i < 4; ++i)
      if (f.a[i] != 0) jet.c1[i] = GammaPoly::rational(lead * f.a[i]);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        long aa = (long)f.a[i] * f.a[j] * (i == j ? 1 : 2);
        if (aa == 0) continue;
        jet.c2[RhoJet::pair_index(i, j)] = psik.scaled(-lead * aa);
      }
    return jet;
  }

  // regular factor
  Rat r = gamma_half_ratio(x);
  GammaPoly psi = psi_value(x);
  GammaPoly psip = psi_prime_value(x);
  Rat scale = numerator ? r : 1 / r;
  GammaPoly lin = numerator ? psi : psi.scaled(-1);
  GammaPoly quad = psi * psi;
  if (numerator)
    quad += psip;
  else
    quad -= psip;
  quad = quad.scaled(rat(1, 2));

  jet.c0 = GammaPoly::rational(scale);
  for (int i = 0; i < 4; ++i)
    if (f.a[i] != 0) jet.c1[i] = lin.scaled(scale * f.a[i]);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      long aa = (long)f.a[i] * f.a[j] * (i == j ? 1 : 2);
      if (aa == 0) continue;
      jet.c2[RhoJet::pair_index(i, j)] = quad.scaled(scale * aa);
    }
  return jet;
}

} // namespace k3
