#pragma once

// Sparse multivariate polynomials over Q.
//
// Terms are kept in graded-lex order: higher total degree first, then
// lexicographically larger exponent vectors first (x0^2 > x0*x1 > x1^2).
// Every basis ordering in the library derives from this one order.

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elim/rational_linalg.hpp"

namespace elim {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  explicit MultiPoly(std::size_t var_count = 0) : var_count_(var_count) {}

  static MultiPoly constant(std::size_t var_count, const Rational& c);
  static MultiPoly monomial(Exponents exponents, const Rational& c = 1);
  static MultiPoly variable(std::size_t var_count, std::size_t index);

  std::size_t var_count() const noexcept { return var_count_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Rational coefficient(const Exponents& e) const;
  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, MultiPoly p) { return p *= s; }
  friend MultiPoly operator-(MultiPoly p) { return p *= Rational(-1); }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t var_count_;
  TermMap terms_;
};

/// Grammar: terms `[coef][*]name<k>[^e]...` joined by + or -, where coef is
/// an integer or p/q and name is any run of letters (x0, u3, w1 all bind by
/// index). Whitespace is ignored. With no var_count the count is inferred as
/// the largest index + 1; otherwise an index >= var_count is an error.
MultiPoly parse_poly(std::string_view text, std::optional<std::size_t> var_count = std::nullopt);

/// Inverse of parse_poly; `prefix` names the variables.
std::string format_poly(const MultiPoly& p, std::string_view prefix = "x");

/// The common total degree, or nullopt for mixed degrees. The zero
/// polynomial reports 0.
std::optional<unsigned> homogeneous_degree(const MultiPoly& p);

MultiPoly partial(const MultiPoly& p, std::size_t var);

/// All exponent vectors of total `degree` in graded-lex order.
std::vector<Exponents> monomial_basis(std::size_t var_count, unsigned degree);

std::size_t binomial(std::size_t n, std::size_t k);

/// p(A x): x_i is replaced by sum_j A(i, j) x_j. Satisfies
/// apply_linear(p, A * B) == apply_linear(apply_linear(p, A), B).
MultiPoly apply_linear(const MultiPoly& p, const Matrix& a);

Rational eval(const MultiPoly& p, std::span<const Rational> point);
std::complex<double> eval_float(const MultiPoly& p, std::span<const std::complex<double>> point);

}  // namespace elim
