#ifndef K3LAMBDA_SERIES_HPP
#define K3LAMBDA_SERIES_HPP

#include "k3lambda/coefficient.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace k3 {

struct SeriesError : std::runtime_error {
  explicit SeriesError(const std::string& m) : std::runtime_error(m) {}
};

constexpr int max_arity = 4;

/// Exponent vector with entries in (1/4)Z, stored in quarter units.
struct Exp {
  std::array<int32_t, max_arity> q{0, 0, 0, 0};

  static Exp unit(int i, int32_t quarters = 4) {
    Exp e;
    e.q[i] = quarters;
    return e;
  }
  static Exp from_ints(std::initializer_list<int> ints) {
    Exp e;
    int i = 0;
    for (int v : ints) e.q[i++] = 4 * v;
    return e;
  }
  Rat value(int i) const { return rat(q[i], 4); }
  bool is_origin() const { return q == std::array<int32_t, max_arity>{0, 0, 0, 0}; }
  friend Exp operator+(Exp a, const Exp& b) {
    for (int i = 0; i < max_arity; ++i) a.q[i] += b.q[i];
    return a;
  }
  friend Exp operator-(Exp a, const Exp& b) {
    for (int i = 0; i < max_arity; ++i) a.q[i] -= b.q[i];
    return a;
  }
  Exp scaled(int32_t n) const {
    Exp e = *this;
    for (auto& v : e.q) v *= n;
    return e;
  }
  auto operator<=>(const Exp&) const = default;
};

/// One linear grading: keep a term iff sum_i weights[i]*e_i <= cutoff.
struct Grading {
  std::array<int, max_arity> weights{0, 0, 0, 0};
  long cutoff = 0;
  long quarters(const Exp& e) const {
    long s = 0;
    for (int i = 0; i < max_arity; ++i) s += (long)weights[i] * e.q[i];
    return s; // 4x the weighted degree
  }
  bool keeps(const Exp& e) const { return quarters(e) <= 4 * cutoff; }
};

/// Truncation data attached to every series.  The primary grading must give
/// at least one variable a positive weight.  The Laurent window, when set,
/// bounds |e_i| for the variables of primary weight 0.  An optional second
/// grading cuts by another nonnegative linear functional; it is what makes
/// mirror-map arithmetic an exact quotient-ring computation.
struct TruncationPolicy {
  int arity = 1;
  Grading primary;
  std::optional<long> window;
  std::optional<Grading> extra;

  static TruncationPolicy weighted(int arity, std::array<int, max_arity> w, long cutoff,
                                   std::optional<long> window = std::nullopt) {
    TruncationPolicy p;
    p.arity = arity;
    p.primary.weights = w;
    p.primary.cutoff = cutoff;
    p.window = window;
    p.validate();
    return p;
  }
  /// Total-degree policy (all weights 1).
  static TruncationPolicy total(int arity, long cutoff) {
    std::array<int, max_arity> w{0, 0, 0, 0};
    for (int i = 0; i < arity; ++i) w[i] = 1;
    return weighted(arity, w, cutoff);
  }

  void validate() const;
  bool keeps(const Exp& e) const;
  /// Most restrictive combination; gradings must agree in their weights.
  static TruncationPolicy meet(const TruncationPolicy& a, const TruncationPolicy& b);
  bool operator==(const TruncationPolicy&) const = default;
};

class MultiSeries;
using SignedMonomial = std::pair<Rat, Exp>; // coefficient (usually +-1) times monomial

/// Sparse exact truncated Laurent series.  Immutable-style value type: all
/// operations return new series; stored terms always satisfy the policy and
/// never have zero coefficients.  Term order is lexicographic in the
/// exponents, which makes every output byte-stable.
class MultiSeries {
public:
  using Terms = std::map<Exp, Coefficient>;

  explicit MultiSeries(TruncationPolicy pol) : pol_(std::move(pol)) {}
  static MultiSeries constant(const TruncationPolicy& pol, const Coefficient& c) {
    MultiSeries s(pol);
    s.add_term(Exp{}, c);
    return s;
  }
  static MultiSeries monomial(const TruncationPolicy& pol, const Exp& e,
                              const Coefficient& c = Coefficient(1)) {
    MultiSeries s(pol);
    s.add_term(e, c);
    return s;
  }

  const TruncationPolicy& policy() const { return pol_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Coefficient coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient() : it->second;
  }
  Coefficient constant_term() const { return coeff(Exp{}); }

  void add_term(const Exp& e, const Coefficient& c);

  MultiSeries operator+(const MultiSeries& o) const;
  MultiSeries operator-(const MultiSeries& o) const;
  MultiSeries operator-() const;
  MultiSeries operator*(const MultiSeries& o) const;
  MultiSeries scaled(const Coefficient& c) const;
  MultiSeries mul_monomial(const Rat& c, const Exp& e) const;
  bool operator==(const MultiSeries& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiSeries& o) const { return !(*this == o); }

  /// Re-truncate into a (usually more restrictive) policy.
  MultiSeries restricted(const TruncationPolicy& pol) const;
  /// Keep only terms with primary weighted degree <= n and window <= w.
  MultiSeries boxed(long n, long w) const;

  MultiSeries invert_unit() const;
  MultiSeries exp_series() const;  // requires zero constant term
  MultiSeries log_series() const;  // requires constant term 1
  MultiSeries sqrt_with_leading(const SignedMonomial& leading) const;

  /// Per-variable substitution by signed Laurent monomials, re-truncated in
  /// the target policy.  images[i] applies to variable i.
  MultiSeries substitute_monomials(const std::vector<SignedMonomial>& images,
                                   const TruncationPolicy& target) const;

  /// theta_i = z_i d/dz_i, exact on rational exponents.
  MultiSeries euler_theta(int i) const;

  /// d/dz_i (shifts the exponent down by one).
  MultiSeries deriv(int i) const;

  bool all_coeffs_rational() const;

  /// Upper bound for power-series iteration loops under this policy.
  long geometric_bound() const;

private:
  TruncationPolicy pol_;
  Terms terms_;
};

/// Sparse polynomial with rational coefficients (integer exponents); used
/// as input to compose_poly and for exact polynomial identities.
struct Poly {
  int arity = 1;
  std::map<Exp, Rat> terms;

  static Poly zero(int arity) { return Poly{arity, {}}; }
  static Poly constant(int arity, const Rat& c) {
    Poly p{arity, {}};
    p.add(Exp{}, c);
    return p;
  }
  static Poly monomial(int arity, const Exp& e, const Rat& c = 1) {
    Poly p{arity, {}};
    p.add(e, c);
    return p;
  }
  void add(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly&) const = default;
  bool is_zero() const { return terms.empty(); }
  Rat eval(const std::vector<Rat>& x) const;
  /// Substitute variable i by a signed Laurent monomial in new variables.
  Poly substitute_monomials(const std::vector<SignedMonomial>& images, int out_arity) const;
};

MultiSeries compose_poly(const Poly& p, const std::vector<MultiSeries>& args);

/// Solves z_k = monomial_k * exp(S_k(z)) by fixed-point iteration; S is a
/// functional of the full vector z with S_k(z) of strictly positive grade.
std::vector<MultiSeries> solve_fixed_point(
    const std::vector<MultiSeries>& monomials,
    const std::function<std::vector<MultiSeries>(const std::vector<MultiSeries>&)>& S);

} // namespace k3

#endif
