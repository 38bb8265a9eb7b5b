#ifndef K3LAMBDA_LOGSERIES_HPP
#define K3LAMBDA_LOGSERIES_HPP

#include "k3lambda/series.hpp"

namespace k3 {

/// Multidegree in the formal logarithms L_1..L_4 (total degree <= 2).
struct LogKey {
  std::array<uint8_t, max_arity> d{0, 0, 0, 0};
  int total() const { return d[0] + d[1] + d[2] + d[3]; }
  static LogKey unit(int i) {
    LogKey k;
    k.d[i] = 1;
    return k;
  }
  friend LogKey operator+(LogKey a, const LogKey& b) {
    for (int i = 0; i < max_arity; ++i) a.d[i] += b.d[i];
    return a;
  }
  auto operator<=>(const LogKey&) const = default;
};

/// Polynomial of degree <= 2 in L_1..L_4 with MultiSeries coefficients.
/// L_i stands for log z_i; euler_theta knows theta_i L_i = 1.
class LogSeries {
public:
  explicit LogSeries(TruncationPolicy pol) : pol_(std::move(pol)) {}
  explicit LogSeries(const MultiSeries& plain) : pol_(plain.policy()) {
    add(LogKey{}, plain);
  }

  const TruncationPolicy& policy() const { return pol_; }
  const std::map<LogKey, MultiSeries>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  MultiSeries component(const LogKey& k) const {
    auto it = comps_.find(k);
    return it == comps_.end() ? MultiSeries(pol_) : it->second;
  }
  MultiSeries plain_part() const { return component(LogKey{}); }
  int log_degree() const {
    int d = 0;
    for (const auto& [k, f] : comps_) d = std::max(d, k.total());
    return d;
  }

  void add(const LogKey& k, const MultiSeries& f);

  LogSeries operator+(const LogSeries& o) const;
  LogSeries operator-(const LogSeries& o) const;
  LogSeries operator-() const;
  LogSeries operator*(const LogSeries& o) const;
  LogSeries scaled(const Coefficient& c) const;
  LogSeries mul_series(const MultiSeries& f) const;
  bool operator==(const LogSeries& o) const { return comps_ == o.comps_; }

  /// theta_i(f L^a) = (theta_i f) L^a + a_i f L^(a - e_i)
  LogSeries euler_theta(int i) const;

  /// True iff every component vanishes on primary weighted degree <= n.
  bool is_zero_through(long n) const;

private:
  TruncationPolicy pol_;
  std::map<LogKey, MultiSeries> comps_;
};

/// Linear factor  sum_i a_i theta_i + c  of a Picard-Fuchs operator.
struct LinForm {
  std::array<Rat, max_arity> a{Rat(0), Rat(0), Rat(0), Rat(0)};
  Rat c = 0;
  LogSeries apply(const LogSeries& s) const;
};

inline LinForm lf(long a1, long a2, long a3, long a4, const Rat& c = 0) {
  LinForm f;
  f.a = {Rat(a1), Rat(a2), Rat(a3), Rat(a4)};
  f.c = c;
  return f;
}

/// One term: coef * z^mono * product of linear factors.
struct PFTerm {
  Rat coef = 1;
  Exp mono;
  std::vector<LinForm> factors;
};

/// Finite sum of (monomial) x (polynomial in Euler operators).
struct PFOperator {
  int arity = 4;
  std::vector<PFTerm> terms;

  LogSeries apply(const LogSeries& s) const;
  /// z -> 0 part as a polynomial in theta (must be homogeneous, degree 2).
  Poly initial_term() const;
  /// Monomial change of coordinates: theta-forms transform by the transpose
  /// of the exponent matrix, monomials by the inverse map.
  PFOperator transported(const std::array<std::array<int, max_arity>, max_arity>& logmap,
                         const std::vector<SignedMonomial>& old_in_new) const;
  /// Scale so the first factor's first nonzero theta coefficient is +1 and
  /// terms are sorted; used to compare operator sets up to a constant.
  PFOperator normalized() const;
  bool same_up_to_scalar(const PFOperator& o) const;
};

/// Expanded view of an operator term as a theta-polynomial (for comparisons).
Poly expand_theta_poly(const std::vector<LinForm>& factors, const Rat& coef);

} // namespace k3

#endif
