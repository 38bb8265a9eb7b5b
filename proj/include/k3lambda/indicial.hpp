#ifndef K3LAMBDA_INDICIAL_HPP
#define K3LAMBDA_INDICIAL_HPP

#include "k3lambda/gkz.hpp"
#include "k3lambda/linalg.hpp"

namespace k3 {

/// Homogeneous quadratic generators in the four commuting Euler variables.
struct IndicialIdeal {
  std::vector<Poly> gens;
};

IndicialIdeal indicial_ideal(const PFSystem& sys);

struct GradedQuotient {
  std::vector<long> dims;                     // quotient dimension per degree 0..max
  std::vector<std::vector<Exp>> standard_mono; // free monomials per degree
};

/// Quotient dimensions by per-degree row reduction of the generator span.
/// Monomial columns are ordered degree-lex with theta_4 smallest, so the
/// surviving degree-2 monomial is theta_4^2 when the quotient allows it.
GradedQuotient graded_quotient(const IndicialIdeal& ideal, int max_degree);

/// Pairing M_ij = d * alpha_ij where theta_i theta_j == alpha_ij * b modulo
/// the ideal, b the standard degree-2 monomial; requires quotient dim 1 there.
Mat4 pairing_matrix(const IndicialIdeal& ideal, const Rat& d);

/// Residue of a degree-2 element on the standard monomial (the functional
/// <h>/d); ideal members give 0.
Rat standard_residue(const IndicialIdeal& ideal, const Poly& h);

bool is_integer_unimodular(const Mat4& p);
/// M == P^t G P exactly.
bool gram_check(const Mat4& m, const Mat4& p, const Mat4& g);

} // namespace k3

#endif
