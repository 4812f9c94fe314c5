#include "elim/rational_linalg.hpp"

#include <algorithm>
#include <utility>

namespace elim {

Rational parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  if (!text.empty() && text.front() == '-') q = -q;
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match rows x cols");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::columns(std::span<const std::size_t> indices) const {
  Matrix out(rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < indices.size(); ++k) out(r, k) = (*this)(r, indices[k]);
  }
  return out;
}

Matrix Matrix::hconcat(const Matrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hconcat: row count mismatch");
  Matrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out = m;
  for (auto& e : out.entries_) e *= s;
  return out;
}

namespace {

// Integer copy of a rational matrix with every row multiplied by the lcm of
// its denominators. Row scaling leaves rank and pivot columns unchanged.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;
  Integer scale = 1;  // product of the row multipliers

  Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

IntMatrix clear_denominators(const Matrix& m) {
  IntMatrix out{m.rows(), m.cols(), std::vector<Integer>(m.rows() * m.cols()), 1};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      out.at(r, c) = q.get_num() * (l / q.get_den());
    }
    out.scale *= l;
  }
  return out;
}

struct Echelon {
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
  Integer last_pivot = 1;
};

// Fraction-free forward elimination. After k pivots every live entry is a
// k+1 minor of the input, so each division below is exact.
Echelon bareiss(IntMatrix& m) {
  Echelon e;
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      e.sign = -e.sign;
    }
    const Integer& piv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const Integer lead = m.at(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        tmp = piv * m.at(i, j) - lead * m.at(r, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.last_pivot = prev;
  return e;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational det(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  if (m.rows() == 0) return 1;
  IntMatrix im = clear_denominators(m);
  const Echelon e = bareiss(im);
  if (e.pivot_cols.size() < m.rows()) return 0;
  Rational out(e.sign * e.last_pivot, im.scale);
  out.canonicalize();
  return out;
}

std::size_t rank(const Matrix& m) {
  IntMatrix im = clear_denominators(m);
  return bareiss(im).pivot_cols.size();
}

Matrix kernel_basis(const Matrix& m) {
  Matrix work = m;
  const auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -work(r, free_cols[k]);
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix work = m.hconcat(Matrix::identity(n));
  const auto pivots = rref(work);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw DomainError("inverse: matrix is singular");
  }
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = work(r, n + c);
  }
  return out;
}

std::vector<std::size_t> select_independent_columns(const Matrix& m,
                                                    std::span<const std::size_t> forbidden) {
  std::vector<bool> banned(m.cols(), false);
  for (auto c : forbidden) {
    if (c >= m.cols()) throw std::out_of_range("forbidden column index out of range");
    banned[c] = true;
  }
  std::vector<std::size_t> allowed;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!banned[c]) allowed.push_back(c);
  }
  IntMatrix im = clear_denominators(m.columns(allowed));
  const Echelon e = bareiss(im);
  if (!forbidden.empty() && e.pivot_cols.size() < rank(m)) {
    throw DomainError("rank unattainable without the forbidden columns");
  }
  std::vector<std::size_t> out;
  out.reserve(e.pivot_cols.size());
  for (auto c : e.pivot_cols) out.push_back(allowed[c]);
  return out;
}

std::vector<std::size_t> complete_to_basis(const Matrix& given) {
  const std::size_t dim = given.rows();
  const std::size_t k = given.cols();
  IntMatrix im = clear_denominators(given.hconcat(Matrix::identity(dim)));
  const Echelon e = bareiss(im);
  for (std::size_t i = 0; i < k; ++i) {
    if (i >= e.pivot_cols.size() || e.pivot_cols[i] != i) {
      throw DomainError("complete_to_basis: given columns are linearly dependent");
    }
  }
  std::vector<std::size_t> out;
  out.reserve(dim - k);
  for (std::size_t i = k; i < e.pivot_cols.size(); ++i) out.push_back(e.pivot_cols[i] - k);
  return out;
}

std::vector<std::size_t> complete_to_basis(std::span<const std::vector<Rational>> columns,
                                           std::size_t dim) {
  Matrix given(dim, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != dim) throw std::invalid_argument("column length differs from dim");
    for (std::size_t r = 0; r < dim; ++r) given(r, c) = columns[c][r];
  }
  return complete_to_basis(given);
}

}  // namespace elim
