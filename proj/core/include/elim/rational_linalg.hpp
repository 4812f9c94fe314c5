#pragma once

// Exact dense linear algebra over Q.
//
// All pivoting is deterministic and leftmost-greedy, so every routine that
// picks columns (select_independent_columns, complete_to_basis) returns the
// same answer on every run.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace elim {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an input is well formed but outside the mathematical domain
/// of an operation (non-exact complex, degree mismatch, guard exceeded...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed text input. `position` is a byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" or "p".
std::string to_string(const Rational& value);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  std::vector<Rational> column(std::size_t c) const;
  /// Submatrix made of the listed columns, in the listed order.
  Matrix columns(std::span<const std::size_t> indices) const;
  /// [this | other]; row counts must agree.
  Matrix hconcat(const Matrix& other) const;
  Matrix transposed() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. 0x0 gives 1.
Rational det(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns spanning the null space, as the columns of a cols() x nullity matrix.
Matrix kernel_basis(const Matrix& m);

/// Inverse of a square non-singular matrix; DomainError when singular.
Matrix inverse(const Matrix& m);

/// Leftmost-greedy maximal independent column set, skipping `forbidden`.
/// Throws DomainError when the remaining columns cannot reach rank(m).
std::vector<std::size_t> select_independent_columns(
    const Matrix& m, std::span<const std::size_t> forbidden = {});

/// Extends the columns of `given` (a dim x k matrix with independent columns)
/// to a basis of Q^dim with standard basis vectors, chosen leftmost-greedy.
/// Returns the chosen standard-basis indices in ascending order.
std::vector<std::size_t> complete_to_basis(const Matrix& given);

/// Convenience overload taking explicit column vectors of length `dim`.
std::vector<std::size_t> complete_to_basis(std::span<const std::vector<Rational>> columns,
                                           std::size_t dim);

}  // namespace elim
