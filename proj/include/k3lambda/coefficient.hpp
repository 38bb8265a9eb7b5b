#ifndef K3LAMBDA_COEFFICIENT_HPP
#define K3LAMBDA_COEFFICIENT_HPP

#include "k3lambda/rational.hpp"

#include <array>
#include <memory>
#include <string>

namespace k3 {

/// Exact scalar: a rational polynomial in two formal constants,
///   kappa  (stands for log 2)   and   varpi (stands for pi^2),
/// of total degree <= 2.  Basis order: 1, k, p, kk, kp, pp.
/// Almost every coefficient in practice is a plain rational, so the five
/// symbol components live behind a pointer that is null in that case.
class Coefficient {
public:
  enum Slot { K = 0, P = 1, KK = 2, KP = 3, PP = 4 };

  Coefficient() = default;
  Coefficient(const Rat& r) : rat_(r) {}
  Coefficient(long n) : rat_(n) {}
  Coefficient(const Coefficient& o) : rat_(o.rat_) {
    if (o.ext_) ext_ = std::make_unique<Ext>(*o.ext_);
  }
  Coefficient(Coefficient&&) noexcept = default;
  Coefficient& operator=(const Coefficient& o) {
    if (this != &o) {
      rat_ = o.rat_;
      ext_ = o.ext_ ? std::make_unique<Ext>(*o.ext_) : nullptr;
    }
    return *this;
  }
  Coefficient& operator=(Coefficient&&) noexcept = default;

  static Coefficient kappa(const Rat& c = 1) { return symbol(K, c); }
  static Coefficient varpi(const Rat& c = 1) { return symbol(P, c); }
  static Coefficient symbol(Slot s, const Rat& c) {
    Coefficient out;
    if (c != 0) out.ext()[s] = c;
    out.normalize();
    return out;
  }

  const Rat& rational_part() const { return rat_; }
  /// kdeg + pdeg <= 2 required.
  Rat part(int kdeg, int pdeg) const;
  void set_part(int kdeg, int pdeg, const Rat& v);

  bool is_zero() const { return rat_ == 0 && !ext_; }
  bool is_rational() const { return !ext_; }
  bool operator==(const Coefficient& o) const;
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient operator-() const;
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  /// Throws if the product would exceed total symbol degree 2.
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  Coefficient& operator*=(const Rat& r);

  std::string str() const;

private:
  using Ext = std::array<Rat, 5>;
  Rat rat_;
  std::unique_ptr<Ext> ext_;

  Ext& ext() {
    if (!ext_) ext_ = std::make_unique<Ext>();
    return *ext_;
  }
  void normalize();
  friend class CoefficientAccess;
};

} // namespace k3

#endif
