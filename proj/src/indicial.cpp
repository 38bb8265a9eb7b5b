#include "k3lambda/indicial.hpp"

#include <algorithm>

namespace k3 {

IndicialIdeal indicial_ideal(const PFSystem& sys) {
  IndicialIdeal ideal;
  for (const auto& op : sys.ops) ideal.gens.push_back(op.initial_term());
  return ideal;
}

namespace {
// monomials of total degree d, descending lex (theta_1 largest): the free
// column after leftmost-pivot rref is then the lex-smallest survivor.
std::vector<Exp> monomials_of_degree(int d) {
  std::vector<Exp> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b)
      for (int c = d - a - b; c >= 0; --c) out.push_back(Exp::from_ints({a, b, c, d - a - b - c}));
  return out;
}

RatRow to_row(const Poly& p, const std::vector<Exp>& basis) {
  RatRow row(basis.size(), Rat(0));
  for (const auto& [e, c] : p.terms) {
    auto it = std::find(basis.begin(), basis.end(), e);
    if (it == basis.end()) throw SeriesError("polynomial outside the graded basis");
    row[it - basis.begin()] = c;
  }
  return row;
}

// span of {m * g} for all monomials m of degree d-2, as rows over degree d
RatMat degree_span(const IndicialIdeal& ideal, int d, const std::vector<Exp>& basis) {
  RatMat rows;
  if (d < 2) return rows;
  for (const Exp& m : monomials_of_degree(d - 2))
    for (const Poly& g : ideal.gens) {
      Poly shifted = Poly::zero(max_arity);
      for (const auto& [e, c] : g.terms) shifted.add(e + m, c);
      rows.push_back(to_row(shifted, basis));
    }
  return rows;
}
} // namespace

GradedQuotient graded_quotient(const IndicialIdeal& ideal, int max_degree) {
  GradedQuotient q;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<Exp> basis = monomials_of_degree(d);
    RatMat rows = degree_span(ideal, d, basis);
    std::vector<size_t> piv = rref(rows);
    q.dims.push_back((long)basis.size() - (long)piv.size());
    std::vector<Exp> free;
    size_t k = 0;
    for (size_t c = 0; c < basis.size(); ++c) {
      if (k < piv.size() && piv[k] == c)
        ++k;
      else
        free.push_back(basis[c]);
    }
    q.standard_mono.push_back(free);
  }
  return q;
}

namespace {
struct Degree2Reducer {
  std::vector<Exp> basis;
  RatMat rrefm;
  std::vector<size_t> pivots;
  size_t free_col = 0;

  explicit Degree2Reducer(const IndicialIdeal& ideal) {
    basis = monomials_of_degree(2);
    rrefm = degree_span(ideal, 2, basis);
    pivots = rref(rrefm);
    if (basis.size() - pivots.size() != 1)
      throw SeriesError("degree-2 quotient is not one dimensional");
    std::vector<bool> isp(basis.size(), false);
    for (size_t c : pivots) isp[c] = true;
    for (size_t c = 0; c < basis.size(); ++c)
      if (!isp[c]) free_col = c;
  }

  Rat residue(const Poly& h) const {
    RatRow v = to_row(h, basis);
    reduce_against(rrefm, pivots, v);
    for (size_t c = 0; c < v.size(); ++c)
      if (c != free_col && v[c] != 0)
        throw SeriesError("degree-2 element does not reduce to the standard monomial");
    return v[free_col];
  }
};
} // namespace

Mat4 pairing_matrix(const IndicialIdeal& ideal, const Rat& d) {
  Degree2Reducer red(ideal);
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Poly h = Poly::monomial(max_arity, Exp::unit(i) + Exp::unit(j));
      m[i][j] = d * red.residue(h);
    }
  return m;
}

Rat standard_residue(const IndicialIdeal& ideal, const Poly& h) {
  return Degree2Reducer(ideal).residue(h);
}

bool is_integer_unimodular(const Mat4& p) {
  for (const auto& row : p)
    for (const Rat& v : row)
      if (!is_integer(v)) return false;
  Rat d = det4(p);
  return d == 1 || d == -1;
}

bool gram_check(const Mat4& m, const Mat4& p, const Mat4& g) {
  if (!is_integer_unimodular(p)) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rat s = 0;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) s += p[k][i] * g[k][l] * p[l][j];
      if (s != m[i][j]) return false;
    }
  return true;
}

} // namespace k3
