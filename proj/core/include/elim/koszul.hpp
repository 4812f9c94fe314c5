#pragma once

// Degree-m piece of the Koszul complex of n+1 forms on P^n.
//
// Term E^i is spanned by e_S (x) x^alpha with |S| = n+1-i and
// deg(alpha) = m - sum_{k in S} d_k, so E^{n+1} holds the degree-m forms.
// The boundary contracts with the forms:
//
//   d(e_S (x) x^alpha) = sum_{k in S} (-1)^{pos(k, S)} e_{S\k} (x) f_k x^alpha
//
// where pos(k, S) is the position of k in ascending S. Basis elements are
// ordered by subset in colex order, then by monomial in graded-lex order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "elim/complexes.hpp"
#include "elim/multipoly.hpp"

namespace elim {

struct KoszulSpec {
  std::size_t n = 0;              // ambient P^n
  std::vector<unsigned> degrees;  // d_0..d_n, each >= 1
  long twist = 0;                 // m

  /// Throws std::invalid_argument on a length or zero-degree violation.
  void validate() const;
};

struct KoszulBasisElement {
  std::uint32_t subset;  // bit k set iff k in S
  Exponents monomial;

  friend bool operator==(const KoszulBasisElement&, const KoszulBasisElement&) = default;
};

/// r_j(m): sum over j-subsets S of binom(m - d_S + n, n).
std::size_t term_dimension(const KoszulSpec& spec, std::size_t j);

/// sum_j (-1)^{j+1} j r_j(m).
long chi(const KoszulSpec& spec);

/// Least twist with no higher cohomology in any summand: sum d_i - n.
long macaulay_bound(std::size_t n, std::span<const unsigned> degrees);
inline long macaulay_bound(const KoszulSpec& spec) { return macaulay_bound(spec.n, spec.degrees); }

/// Basis of the summand with |S| = j, in complex order.
std::vector<KoszulBasisElement> koszul_basis(const KoszulSpec& spec, std::size_t j);

/// Full complex E^0..E^{n+1}, including zero-dimensional terms.
BasedComplex build_full_complex(const KoszulSpec& spec, std::span<const MultiPoly> forms);

/// build_full_complex with zero leading terms trimmed (torsion unchanged).
/// DomainError when the twist is below macaulay_bound or a form does not
/// have its stated degree.
BasedComplex build_complex(const KoszulSpec& spec, std::span<const MultiPoly> forms);

}  // namespace elim
