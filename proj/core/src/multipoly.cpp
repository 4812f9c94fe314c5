#include "elim/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace elim {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(std::size_t var_count, const Rational& c) {
  MultiPoly p(var_count);
  p.add_term(Exponents(var_count, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(Exponents exponents, const Rational& c) {
  MultiPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t var_count, std::size_t index) {
  if (index >= var_count) throw std::out_of_range("variable index out of range");
  Exponents e(var_count, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != var_count_) throw std::invalid_argument("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (var_count_ != o.var_count_) throw std::invalid_argument("polynomials have different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.var_count_);
  Exponents e(a.var_count_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::optional<std::size_t> var_count)
      : text_(text), fixed_count_(var_count) {}

  MultiPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      parse_term(negative);
      first = false;
      skip_ws();
    }

    std::size_t count = fixed_count_.value_or(max_index_ + 1);
    if (!fixed_count_ && !saw_variable_) count = 0;
    MultiPoly p(count);
    for (auto& [sparse, c] : raw_terms_) {
      Exponents e(count, 0);
      for (auto [var, power] : sparse) e[var] += power;
      p.add_term(e, c);
    }
    return p;
  }

 private:
  using SparseMonomial = std::vector<std::pair<std::size_t, unsigned>>;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool peek_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }
  bool peek_alpha() const { return !at_end() && std::isalpha(static_cast<unsigned char>(peek())); }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_term(bool negative) {
    Rational coef = 1;
    bool have_coef = false;
    if (peek_digit()) {
      const std::size_t start = pos_;
      Integer num(digits(), 10);
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = Integer(digits(), 10);
        if (den == 0) throw ParseError("zero denominator", start);
      }
      coef = Rational(num, den);
      coef.canonicalize();
      have_coef = true;
      skip_ws();
    }

    SparseMonomial mono;
    bool need_factor = false;
    while (!at_end()) {
      skip_ws();
      if (!at_end() && peek() == '*') {
        if (!have_coef && mono.empty()) throw ParseError("'*' must follow a coefficient or variable", pos_);
        ++pos_;
        skip_ws();
        need_factor = true;
      }
      if (!peek_alpha()) {
        if (need_factor) throw ParseError("expected a variable after '*'", pos_);
        break;
      }
      const std::size_t name_start = pos_;
      while (peek_alpha()) ++pos_;
      if (!peek_digit()) throw ParseError("unknown variable (expected name followed by index)", name_start);
      const std::size_t index = std::stoul(digits());
      if (fixed_count_ && index >= *fixed_count_) {
        throw ParseError("unknown variable index " + std::to_string(index), name_start);
      }
      unsigned power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        power = static_cast<unsigned>(std::stoul(digits()));
      }
      mono.emplace_back(index, power);
      max_index_ = std::max(max_index_, index);
      saw_variable_ = true;
      need_factor = false;
      skip_ws();
    }
    if (!have_coef && mono.empty()) throw ParseError("expected a term", pos_);
    raw_terms_.emplace_back(std::move(mono), negative ? Rational(-coef) : coef);
  }

  std::string_view text_;
  std::optional<std::size_t> fixed_count_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
  bool saw_variable_ = false;
  std::vector<std::pair<SparseMonomial, Rational>> raw_terms_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::optional<std::size_t> var_count) {
  return PolyParser(text, var_count).parse();
}

std::string format_poly(const MultiPoly& p, std::string_view prefix) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(prefix) + std::to_string(k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::optional<unsigned> homogeneous_degree(const MultiPoly& p) {
  if (p.is_zero()) return 0u;
  const unsigned d = total_degree(p.terms().begin()->first);
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != d) return std::nullopt;
  }
  return d;
}

MultiPoly partial(const MultiPoly& p, std::size_t var) {
  if (var >= p.var_count()) throw std::out_of_range("partial: variable index out of range");
  MultiPoly out(p.var_count());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

namespace {

void fill_basis(std::size_t var, unsigned remaining, Exponents& current, std::vector<Exponents>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.push_back(current);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    current[var] = k;
    fill_basis(var + 1, remaining - k, current, out);
  }
}

}  // namespace

std::vector<Exponents> monomial_basis(std::size_t var_count, unsigned degree) {
  std::vector<Exponents> out;
  if (var_count == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents current(var_count, 0);
  fill_basis(0, degree, current, out);
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

MultiPoly apply_linear(const MultiPoly& p, const Matrix& a) {
  const std::size_t n = p.var_count();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("apply_linear: matrix size differs from variable count");
  std::vector<MultiPoly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly row(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) != 0) row += a(i, j) * MultiPoly::variable(n, j);
    }
    images.push_back(std::move(row));
  }

  MultiPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term = term * images[i];
    }
    out += term;
  }
  return out;
}

Rational eval(const MultiPoly& p, std::span<const Rational> point) {
  if (point.size() != p.var_count()) throw std::invalid_argument("eval: point length differs from variable count");
  Rational out = 0;
  Rational term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (unsigned j = 0; j < e[k]; ++j) term *= point[k];
    }
    out += term;
  }
  return out;
}

std::complex<double> eval_float(const MultiPoly& p, std::span<const std::complex<double>> point) {
  if (point.size() != p.var_count()) throw std::invalid_argument("eval_float: point length differs from variable count");
  std::complex<double> out = 0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> term = c.get_d();
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (unsigned j = 0; j < e[k]; ++j) term *= point[k];
    }
    out += term;
  }
  return out;
}

}  // namespace elim
