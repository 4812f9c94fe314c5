#pragma once

// Bounded complexes of based vector spaces over Q and their torsion.
//
//   0 -> E^0 --d_0--> E^1 --d_1--> ... --d_n--> E^{n+1} -> 0
//
// d_i is stored as an r_{i+1} x r_i matrix whose columns are the images of
// the basis vectors of E^i.

#include <cstddef>
#include <span>
#include <vector>

#include "elim/rational_linalg.hpp"

namespace elim {

class BasedComplex {
 public:
  /// Throws std::invalid_argument when the boundary shapes do not match dims.
  BasedComplex(std::vector<std::size_t> dims, std::vector<Matrix> boundaries);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const std::vector<Matrix>& boundaries() const noexcept { return boundaries_; }
  std::size_t term_count() const noexcept { return dims_.size(); }
  /// The index n of the top boundary d_n; the last term is E^{n+1}.
  std::size_t top_index() const noexcept { return boundaries_.size() - 1; }

  /// Same dims, every boundary multiplied by mu.
  BasedComplex scaled(const Rational& mu) const;

  friend bool operator==(const BasedComplex&, const BasedComplex&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix> boundaries_;
};

struct TorsionFactor {
  std::size_t term;  // k for the factor det(D_k); 0 is the det(S_0) factor
  Rational det;
  int exponent;      // +1 or -1, before the final (-1)^n adjustment
};

struct TorsionResult {
  /// The resolved torsion (already raised to (-1)^n). Never zero.
  Rational value;
  /// Parity of n, the index of the top boundary.
  bool n_odd = false;
  std::vector<TorsionFactor> factor_log;
  /// kappa_i = rank d_i.
  std::vector<std::size_t> kappa;
};

/// d_{i+1} d_i = 0 for all i.
bool is_complex(const BasedComplex& c);

/// rank d_{i-1} + rank d_i = r_i at every term. Throws DomainError if `c`
/// is not a complex.
bool is_exact(const BasedComplex& c);

/// Torsion relative to the standard bases, using the leftmost-greedy choice
/// of completing basis vectors. DomainError when `c` is not an exact complex
/// or has a zero-dimensional first or last term.
TorsionResult torsion(const BasedComplex& c);

/// Torsion from an explicit choice of sections. sections[i] is an
/// r_i x kappa_i matrix S_i for i = 0..n, such that [d_{i-1} S_{i-1} | S_i]
/// is invertible for every i (S_{n+1} is empty). Any valid choice yields the
/// same value as torsion(c).
TorsionResult torsion_with_sections(const BasedComplex& c, std::span<const Matrix> sections);

struct TrimmedComplex {
  BasedComplex complex;
  std::size_t leading_removed = 0;
  /// Removing an odd number of trailing zero terms inverts the torsion.
  std::size_t trailing_removed = 0;
};

/// Drops zero-dimensional terms from both ends. DomainError if every term is
/// zero. Dropping leading terms leaves the torsion unchanged.
TrimmedComplex trim(const BasedComplex& c);

/// (-1)^{n+1} sum_i (-1)^i i r_i: the degree of the torsion as a function of
/// a common scalar multiplying every boundary map.
long scaling_exponent(std::span<const std::size_t> dims);

}  // namespace elim
