#pragma once

// Resultants, discriminants and Chow forms built on Koszul torsion, plus the
// classical Sylvester determinant used as an independent check for n = 1.

#include <cstddef>
#include <span>
#include <vector>

#include "elim/multipoly.hpp"

namespace elim {

/// n+1 homogeneous forms in n+1 variables.
class FormSystem {
 public:
  /// Degrees are read off the forms, which must be nonzero, homogeneous and
  /// of positive degree. DomainError otherwise.
  explicit FormSystem(std::vector<MultiPoly> forms);

  /// Explicit degrees; a zero form is accepted as a form of its stated degree.
  FormSystem(std::vector<MultiPoly> forms, std::vector<unsigned> degrees);

  std::size_t n() const noexcept { return forms_.size() - 1; }
  const std::vector<MultiPoly>& forms() const noexcept { return forms_; }
  const std::vector<unsigned>& degrees() const noexcept { return degrees_; }

 private:
  void validate() const;

  std::vector<MultiPoly> forms_;
  std::vector<unsigned> degrees_;
};

/// Torsion of the Koszul complex at the Macaulay bound, or 0 when the forms
/// share a projective zero (the complex is not exact there).
Rational resultant(const FormSystem& sys);

/// Determinant of the Sylvester matrix of two binary forms.
Rational sylvester_resultant(const MultiPoly& f, const MultiPoly& g);

/// sum_i prod_{j != i} d_j.
long resultant_degree(std::span<const unsigned> degrees);

/// Forms whose coefficients are read from `coefficients`, form by form, in
/// monomial_basis order. Used to specialize generic systems.
std::vector<MultiPoly> forms_from_coefficients(std::size_t n, std::span<const unsigned> degrees,
                                               std::span<const Rational> coefficients);

/// Number of coefficient variables of a generic system.
std::size_t coefficient_count(std::size_t n, std::span<const unsigned> degrees);

struct SymbolicLimits {
  std::size_t max_forms = 3;
  long max_degree = 6;
  std::size_t max_grid = 65536;
};

/// The resultant as a polynomial in the generic coefficients (variable index
/// = position in forms_from_coefficients order), recovered by exact tensor
/// grid interpolation. Sign normalized so the first term in graded-lex order
/// is positive. DomainError when a guard in `limits` is exceeded.
MultiPoly resultant_symbolic(std::size_t n, std::span<const unsigned> degrees,
                             const SymbolicLimits& limits = {});

/// Resultant of the partial derivatives, with no normalizing power of the
/// degree divided out. Zero iff the hypersurface is singular.
Rational discriminant(const MultiPoly& f);

/// prod_i (sum_j u_j p_ij) over the points, each first scaled so that its
/// first nonzero coordinate is 1.
MultiPoly chow_form_points(std::span<const std::vector<Rational>> points);

}  // namespace elim
