#ifndef K3LAMBDA_GAMMAJET_HPP
#define K3LAMBDA_GAMMAJET_HPP

#include "k3lambda/coefficient.hpp"

#include <array>
#include <map>

namespace k3 {

/// Rational polynomial in the Euler constant gamma, kappa (= log 2) and
/// varpi (= pi^2), total degree <= 2.  gamma is a scratch symbol only: it
/// must cancel before a value leaves the module (it has no Coefficient slot).
struct GammaPoly {
  std::map<std::array<int, 3>, Rat> t; // (g,k,p) -> coefficient

  static GammaPoly rational(const Rat& r) {
    GammaPoly p;
    p.add({0, 0, 0}, r);
    return p;
  }
  static GammaPoly sym(int g, int k, int pp, const Rat& r) {
    GammaPoly p;
    p.add({g, k, pp}, r);
    return p;
  }
  void add(const std::array<int, 3>& key, const Rat& r) {
    if (r == 0) return;
    if (key[0] + key[1] + key[2] > 2) throw std::domain_error("GammaPoly degree above 2");
    auto [it, fresh] = t.emplace(key, r);
    if (!fresh) {
      it->second += r;
      if (it->second == 0) t.erase(it);
    }
  }
  bool is_zero() const { return t.empty(); }
  bool gamma_free() const {
    for (const auto& [k, c] : t)
      if (k[0] != 0) return false;
    return true;
  }
  GammaPoly& operator+=(const GammaPoly& o) {
    for (const auto& [k, c] : o.t) add(k, c);
    return *this;
  }
  GammaPoly& operator-=(const GammaPoly& o) {
    for (const auto& [k, c] : o.t) add(k, -c);
    return *this;
  }
  friend GammaPoly operator*(const GammaPoly& a, const GammaPoly& b) {
    GammaPoly out;
    for (const auto& [ka, ca] : a.t)
      for (const auto& [kb, cb] : b.t)
        out.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
    return out;
  }
  GammaPoly scaled(const Rat& r) const {
    GammaPoly out;
    for (const auto& [k, c] : t) out.add(k, c * r);
    return out;
  }
  /// Requires gamma-freeness.
  Coefficient to_coefficient() const;
};

/// Degree-2 Taylor polynomial in rho_1..rho_4 with GammaPoly coefficients.
struct RhoJet {
  GammaPoly c0;
  std::array<GammaPoly, 4> c1;
  std::array<GammaPoly, 10> c2; // coefficient of rho_i rho_j, i <= j

  static int pair_index(int i, int j); // 0-based, i <= j
  static RhoJet one() {
    RhoJet j;
    j.c0 = GammaPoly::rational(1);
    return j;
  }
  friend RhoJet operator*(const RhoJet& a, const RhoJet& b);
};

/// Exact digamma / trigamma at integer or half-integer arguments.
/// psi(m+1) = -gamma + H_m, psi(m+1/2) = -gamma - 2 kappa + 2 sum 1/(2j-1),
/// psi'(m+1) = varpi/6 - sum 1/k^2, psi'(m+1/2) = varpi/2 - 4 sum 1/(2j-1)^2,
/// extended to nonpositive half-integers by the recurrences.
GammaPoly psi_value(const Rat& x);
GammaPoly psi_prime_value(const Rat& x);

/// Gamma(x) = gamma_half_ratio(x) * Gamma(1/2)^halfpow(x) for regular x;
/// halfpow is 1 for half-integers, 0 for positive integers.
Rat gamma_half_ratio(const Rat& x);

/// One Gamma factor of a coefficient scheme: argument a.n + cst, where the
/// same vector a gives the rho-shift of the argument.
struct GFactor {
  std::array<int, 4> a{0, 0, 0, 0};
  Rat cst = 1;
  long arg_num_times2(const std::array<long, 4>& n) const {
    long v = 0;
    for (int i = 0; i < 4; ++i) v += 2L * a[i] * n[i];
    Rat c2 = cst * 2;
    v += to_long(c2);
    return v; // 2x the argument (integer since denominators divide 2)
  }
};

/// Jet of Gamma(arg + delta)^(+1) or of 1/Gamma(arg + delta), delta = a.rho,
/// divided by Gamma(1/2)^halfpow; halfpow is returned through the reference.
RhoJet gamma_factor_jet(const GFactor& f, const std::array<long, 4>& n, bool numerator,
                        int& halfpow);

} // namespace k3

#endif
