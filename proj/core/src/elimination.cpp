#include "elim/elimination.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "elim/complexes.hpp"
#include "elim/koszul.hpp"

namespace elim {

FormSystem::FormSystem(std::vector<MultiPoly> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw DomainError("form system needs at least one form");
  degrees_.reserve(forms_.size());
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].is_zero()) throw DomainError("form " + std::to_string(i) + " is zero");
    const auto d = homogeneous_degree(forms_[i]);
    if (!d) throw DomainError("form " + std::to_string(i) + " is not homogeneous");
    degrees_.push_back(*d);
  }
  validate();
}

FormSystem::FormSystem(std::vector<MultiPoly> forms, std::vector<unsigned> degrees)
    : forms_(std::move(forms)), degrees_(std::move(degrees)) {
  if (forms_.empty()) throw DomainError("form system needs at least one form");
  if (degrees_.size() != forms_.size()) throw DomainError("one degree per form required");
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    const auto d = homogeneous_degree(forms_[i]);
    if (!forms_[i].is_zero() && (!d || *d != degrees_[i])) {
      throw DomainError("form " + std::to_string(i) + " is not homogeneous of degree " +
                        std::to_string(degrees_[i]));
    }
  }
  validate();
}

void FormSystem::validate() const {
  const std::size_t vars = forms_.size();
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].var_count() != vars) {
      throw DomainError("form " + std::to_string(i) + " has " + std::to_string(forms_[i].var_count()) +
                        " variables; a system of " + std::to_string(vars) + " forms needs " +
                        std::to_string(vars));
    }
    if (degrees_[i] == 0) throw DomainError("form " + std::to_string(i) + " has degree 0");
  }
}

Rational resultant(const FormSystem& sys) {
  KoszulSpec spec{sys.n(), sys.degrees(), 0};
  spec.twist = macaulay_bound(spec);
  const BasedComplex c = build_complex(spec, sys.forms());
  if (!is_exact(c)) return 0;
  return torsion(c).value;
}

Rational sylvester_resultant(const MultiPoly& f, const MultiPoly& g) {
  if (f.var_count() != 2 || g.var_count() != 2) throw DomainError("sylvester: forms must be binary");
  if (f.is_zero() || g.is_zero()) throw DomainError("sylvester: zero form");
  const auto df = homogeneous_degree(f);
  const auto dg = homogeneous_degree(g);
  if (!df || !dg) throw DomainError("sylvester: forms must be homogeneous");
  const std::size_t d0 = *df;
  const std::size_t d1 = *dg;
  const std::size_t size = d0 + d1;
  Matrix s(size, size);
  for (std::size_t r = 0; r < d1; ++r) {
    for (std::size_t k = 0; k <= d0; ++k) {
      s(r, r + k) = f.coefficient({static_cast<unsigned>(d0 - k), static_cast<unsigned>(k)});
    }
  }
  for (std::size_t r = 0; r < d0; ++r) {
    for (std::size_t k = 0; k <= d1; ++k) {
      s(d1 + r, r + k) = g.coefficient({static_cast<unsigned>(d1 - k), static_cast<unsigned>(k)});
    }
  }
  return det(s);
}

long resultant_degree(std::span<const unsigned> degrees) {
  long total = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    long prod = 1;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      if (j != i) prod *= degrees[j];
    }
    total += prod;
  }
  return total;
}

std::size_t coefficient_count(std::size_t n, std::span<const unsigned> degrees) {
  std::size_t total = 0;
  for (auto d : degrees) total += binomial(d + n, n);
  return total;
}

std::vector<MultiPoly> forms_from_coefficients(std::size_t n, std::span<const unsigned> degrees,
                                               std::span<const Rational> coefficients) {
  if (coefficients.size() != coefficient_count(n, degrees)) {
    throw std::invalid_argument("coefficient vector has the wrong length");
  }
  std::vector<MultiPoly> forms;
  std::size_t offset = 0;
  for (auto d : degrees) {
    MultiPoly f(n + 1);
    for (const auto& mono : monomial_basis(n + 1, d)) f.add_term(mono, coefficients[offset++]);
    forms.push_back(std::move(f));
  }
  return forms;
}

namespace {

// Inverse of the Vandermonde matrix V(k, j) = k^j on nodes 0..degree, so that
// monomial coefficients are V^{-1} times sampled values.
Matrix inverse_vandermonde(std::size_t degree) {
  Matrix v(degree + 1, degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) {
    Rational p = 1;
    for (std::size_t j = 0; j <= degree; ++j) {
      v(k, j) = p;
      p *= static_cast<unsigned long>(k);
    }
  }
  return inverse(v);
}

}  // namespace

MultiPoly resultant_symbolic(std::size_t n, std::span<const unsigned> degrees, const SymbolicLimits& limits) {
  if (degrees.size() != n + 1) throw DomainError("resultant_symbolic: need n+1 degrees");
  if (std::find(degrees.begin(), degrees.end(), 0u) != degrees.end()) {
    throw DomainError("resultant_symbolic: degrees must be positive");
  }
  if (degrees.size() > limits.max_forms) {
    throw DomainError("resultant_symbolic: guard exceeded (" + std::to_string(degrees.size()) + " forms > " +
                      std::to_string(limits.max_forms) + ")");
  }
  if (resultant_degree(degrees) > limits.max_degree) {
    throw DomainError("resultant_symbolic: guard exceeded (degree " + std::to_string(resultant_degree(degrees)) +
                      " > " + std::to_string(limits.max_degree) + ")");
  }

  // Per-variable degree bound: the resultant has degree prod_{j != i} d_j in
  // the coefficients of form i.
  std::vector<std::size_t> var_degree;
  std::vector<std::size_t> var_block;
  std::vector<std::size_t> block_degree;
  for (std::size_t i = 0; i <= n; ++i) {
    std::size_t prod = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j != i) prod *= degrees[j];
    }
    block_degree.push_back(prod);
    for (std::size_t k = 0; k < binomial(degrees[i] + n, n); ++k) {
      var_degree.push_back(prod);
      var_block.push_back(i);
    }
  }
  const std::size_t vars = var_degree.size();

  std::size_t grid = 1;
  for (auto d : var_degree) {
    if (grid > limits.max_grid / (d + 1)) {
      throw DomainError("resultant_symbolic: guard exceeded (interpolation grid larger than " +
                        std::to_string(limits.max_grid) + ")");
    }
    grid *= d + 1;
  }

  // Mixed radix: variable 0 varies slowest.
  std::vector<std::size_t> stride(vars, 1);
  for (std::size_t v = vars; v-- > 1;) stride[v - 1] = stride[v] * (var_degree[v] + 1);

  const std::vector<unsigned> degree_vec(degrees.begin(), degrees.end());
  std::vector<Rational> values(grid);
  auto evaluate_range = [&](std::size_t begin, std::size_t end) {
    std::vector<Rational> coeffs(vars);
    for (std::size_t idx = begin; idx < end; ++idx) {
      for (std::size_t v = 0; v < vars; ++v) coeffs[v] = (idx / stride[v]) % (var_degree[v] + 1);
      FormSystem sys(forms_from_coefficients(n, degree_vec, coeffs), degree_vec);
      values[idx] = resultant(sys);
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), grid / 64));
  if (workers == 1) {
    evaluate_range(0, grid);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (grid + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(grid, begin + chunk);
      if (begin < end) pool.emplace_back(evaluate_range, begin, end);
    }
  }

  // Interpolate one axis at a time.
  std::vector<Matrix> vinv_cache(*std::max_element(var_degree.begin(), var_degree.end()) + 1);
  std::vector<Rational> fiber;
  std::vector<Rational> solved;
  for (std::size_t v = 0; v < vars; ++v) {
    const std::size_t d = var_degree[v];
    if (vinv_cache[d].rows() == 0) vinv_cache[d] = inverse_vandermonde(d);
    const Matrix& vinv = vinv_cache[d];
    fiber.resize(d + 1);
    solved.resize(d + 1);
    for (std::size_t base = 0; base < grid; ++base) {
      if ((base / stride[v]) % (d + 1) != 0) continue;
      for (std::size_t k = 0; k <= d; ++k) fiber[k] = values[base + k * stride[v]];
      for (std::size_t j = 0; j <= d; ++j) {
        solved[j] = 0;
        for (std::size_t k = 0; k <= d; ++k) {
          if (vinv(j, k) != 0 && fiber[k] != 0) solved[j] += vinv(j, k) * fiber[k];
        }
      }
      for (std::size_t j = 0; j <= d; ++j) values[base + j * stride[v]] = solved[j];
    }
  }

  MultiPoly out(vars);
  Exponents e(vars);
  std::vector<std::size_t> block_sum(n + 1);
  for (std::size_t idx = 0; idx < grid; ++idx) {
    if (values[idx] == 0) continue;
    std::fill(block_sum.begin(), block_sum.end(), 0);
    for (std::size_t v = 0; v < vars; ++v) {
      e[v] = static_cast<unsigned>((idx / stride[v]) % (var_degree[v] + 1));
      block_sum[var_block[v]] += e[v];
    }
    if (block_sum != block_degree) {
      throw std::logic_error("resultant_symbolic: interpolation inconsistency (term outside the multidegree)");
    }
    out.add_term(e, values[idx]);
  }
  if (!out.is_zero() && out.terms().begin()->second < 0) out *= Rational(-1);
  return out;
}

Rational discriminant(const MultiPoly& f) {
  const auto d = homogeneous_degree(f);
  if (!d) throw DomainError("discriminant: form is not homogeneous");
  if (f.is_zero() || *d < 2) throw DomainError("discriminant: degree must be at least 2");
  std::vector<MultiPoly> partials;
  for (std::size_t k = 0; k < f.var_count(); ++k) partials.push_back(partial(f, k));
  FormSystem sys(std::move(partials), std::vector<unsigned>(f.var_count(), *d - 1));
  return resultant(sys);
}

MultiPoly chow_form_points(std::span<const std::vector<Rational>> points) {
  if (points.empty()) throw DomainError("chow form: no points");
  const std::size_t vars = points.front().size();
  MultiPoly out = MultiPoly::constant(vars, 1);
  for (const auto& p : points) {
    if (p.size() != vars) throw DomainError("chow form: points have different dimensions");
    const auto lead = std::find_if(p.begin(), p.end(), [](const Rational& q) { return q != 0; });
    if (lead == p.end()) throw DomainError("chow form: zero vector is not a projective point");
    const Rational scale = 1 / *lead;
    MultiPoly linear(vars);
    for (std::size_t j = 0; j < vars; ++j) {
      if (p[j] != 0) linear += Rational(scale * p[j]) * MultiPoly::variable(vars, j);
    }
    out = out * linear;
  }
  return out;
}

}  // namespace elim
