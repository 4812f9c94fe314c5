#pragma once

// Diagonal one-parameter subgroups acting on polynomials.
//
// Convention: lambda(t) scales coordinate k by t^{a_k} and acts on functions
// by (lambda(t) . F)(w) = F(lambda(t)^{-1} w). A monomial c w^beta therefore
// picks up the factor t^{-<a, beta>}. The weight of F is the smallest
// exponent that survives, i.e. lambda(t) . F = t^{weight} (F_0 + O(t)).

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "elim/multipoly.hpp"

namespace elim {

struct OnePS {
  std::vector<long> weights;
};

/// Exponent e -> the (nonzero) part of F scaled by t^e.
using WeightDecomposition = std::map<long, MultiPoly>;

WeightDecomposition act_decompose(const MultiPoly& f, const OnePS& lambda);

/// Minimal t-exponent of lambda(t) . F. DomainError for F = 0.
long weight(const MultiPoly& f, const OnePS& lambda);

/// The part at the minimal exponent: the projective limit of lambda(t) . F
/// as t -> 0.
MultiPoly limit_polynomial(const MultiPoly& f, const OnePS& lambda);

/// lambda(t) . F evaluated exactly at a nonzero rational t.
MultiPoly act(const MultiPoly& f, const OnePS& lambda, const Rational& t);

/// Weights on the coefficients of degree-d forms in n+1 variables (in
/// monomial_basis order) induced by x -> lambda(t) x with ambient weights b:
/// the coefficient of x^alpha gets -<b, alpha>.
OnePS induced_coefficient_weights(std::size_t n, unsigned d, const OnePS& ambient);

/// Least-squares slope of log ||lambda(t) . F||^2 (coefficient 2-norm)
/// against log t^2 over the sample points. Needs at least two t in (0, 1).
double slope_fit(const MultiPoly& f, const OnePS& lambda, std::span<const double> t_values);

}  // namespace elim
