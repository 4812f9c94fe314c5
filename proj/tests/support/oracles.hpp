#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check (the determinant oracle is cofactor expansion, the
// symbolic oracles expand determinants of polynomial matrices by Leibniz).

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "elim/complexes.hpp"
#include "elim/multipoly.hpp"
#include "elim/rational_linalg.hpp"

namespace elim::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Small rational with numerator in [-range, range] and denominator in {1, 2, 3}.
inline Rational small_rational(Rng& rng, long range = 3) {
  Rational q(uniform_int(rng, -range, range), uniform_int(rng, 1, 3));
  q.canonicalize();
  return q;
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long range = 3, bool integer = true) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = integer ? Rational(uniform_int(rng, -range, range)) : small_rational(rng, range);
    }
  }
  return m;
}

/// Laplace expansion along the first row.
inline Rational cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    const Rational term = m(0, c) * cofactor_det(minor);
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Nonsingular by cofactor check; retries until one is found.
inline Matrix random_invertible(Rng& rng, std::size_t n, long range = 2, bool integer = false) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, range, integer);
    if (cofactor_det(m) != 0) return m;
  }
}

/// Naive Gauss-Jordan inverse, used only to assemble random complexes.
inline Matrix gauss_inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a(p, c) == 0) ++p;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const Rational s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// A random exact complex with between 2 and max_terms terms and every
/// r_i <= max_dim. Built as G_{i+1} J_i G_i^{-1} where J_i maps the last
/// kappa_i coordinates of E^i onto the first kappa_i coordinates of E^{i+1}.
inline BasedComplex random_exact_complex(Rng& rng, std::size_t max_terms = 5, std::size_t max_dim = 6) {
  const std::size_t terms = static_cast<std::size_t>(uniform_int(rng, 2, static_cast<long>(max_terms)));
  std::vector<std::size_t> kappa(terms, 0);  // kappa[i] = rank d_i, kappa[terms-1] = 0
  std::size_t prev = 0;
  for (std::size_t i = 0; i + 1 < terms; ++i) {
    const long hi = static_cast<long>(max_dim - prev);
    kappa[i] = static_cast<std::size_t>(uniform_int(rng, 1, std::max<long>(1, std::min<long>(hi, 4))));
    prev = kappa[i];
  }
  std::vector<std::size_t> dims(terms);
  for (std::size_t i = 0; i < terms; ++i) dims[i] = (i == 0 ? 0 : kappa[i - 1]) + kappa[i];

  std::vector<Matrix> change;
  for (auto d : dims) change.push_back(random_invertible(rng, d, 2, false));

  std::vector<Matrix> boundaries;
  for (std::size_t i = 0; i + 1 < terms; ++i) {
    Matrix j(dims[i + 1], dims[i]);
    const std::size_t offset = i == 0 ? 0 : kappa[i - 1];
    for (std::size_t k = 0; k < kappa[i]; ++k) j(k, offset + k) = 1;
    boundaries.push_back(change[i + 1] * j * gauss_inverse(change[i]));
  }
  return BasedComplex(dims, boundaries);
}

/// A random valid choice of sections S_0..S_n for torsion_with_sections.
inline std::vector<Matrix> random_sections(Rng& rng, const BasedComplex& c) {
  const auto& d = c.boundaries();
  const std::size_t n = c.top_index();
  std::vector<std::size_t> kappa;
  for (const auto& b : d) kappa.push_back(rank(b));
  std::vector<Matrix> s;
  s.push_back(random_invertible(rng, c.dims()[0], 3, false));
  for (std::size_t i = 1; i <= n; ++i) {
    for (;;) {
      Matrix candidate = random_matrix(rng, c.dims()[i], kappa[i], 3, false);
      const Matrix block = (d[i - 1] * s[i - 1]).hconcat(candidate);
      if (cofactor_det(block) != 0) {
        s.push_back(std::move(candidate));
        break;
      }
    }
  }
  return s;
}

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Leibniz expansion over permutations.
inline MultiPoly symbolic_det(const PolyMatrix& m, std::size_t vars) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  MultiPoly total(vars);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    MultiPoly term = MultiPoly::constant(vars, inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Generic Sylvester matrix of binary forms of degrees d0, d1 in coefficient
/// variables u0..u_{d0}, u_{d0+1}..u_{d0+d1+1}, determinant by Leibniz.
inline MultiPoly symbolic_sylvester(unsigned d0, unsigned d1) {
  const std::size_t vars = d0 + d1 + 2;
  const std::size_t size = d0 + d1;
  PolyMatrix m(size, std::vector<MultiPoly>(size, MultiPoly(vars)));
  for (std::size_t r = 0; r < d1; ++r) {
    for (std::size_t k = 0; k <= d0; ++k) m[r][r + k] = MultiPoly::variable(vars, k);
  }
  for (std::size_t r = 0; r < d0; ++r) {
    for (std::size_t k = 0; k <= d1; ++k) m[d1 + r][r + k] = MultiPoly::variable(vars, d0 + 1 + k);
  }
  return symbolic_det(m, vars);
}

/// Generic k x k determinant in variables u_{rk+c}.
inline MultiPoly symbolic_generic_det(std::size_t k) {
  const std::size_t vars = k * k;
  PolyMatrix m(k, std::vector<MultiPoly>(k, MultiPoly(vars)));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = MultiPoly::variable(vars, r * k + c);
  }
  return symbolic_det(m, vars);
}

inline MultiPoly random_form(Rng& rng, std::size_t vars, unsigned degree, long range = 5) {
  MultiPoly f(vars);
  for (const auto& mono : monomial_basis(vars, degree)) f.add_term(mono, uniform_int(rng, -range, range));
  return f;
}

inline MultiPoly random_nonzero_form(Rng& rng, std::size_t vars, unsigned degree, long range = 5) {
  for (;;) {
    MultiPoly f = random_form(rng, vars, degree, range);
    if (!f.is_zero()) return f;
  }
}

/// Integer matrix with determinant 1: product of random elementary shears.
inline Matrix random_sl(Rng& rng, std::size_t n, int shears = 6) {
  Matrix a = Matrix::identity(n);
  for (int s = 0; s < shears; ++s) {
    const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    Matrix e = Matrix::identity(n);
    e(i, j) = uniform_int(rng, -2, 2);
    a = a * e;
  }
  return a;
}

/// E[log |w0|^2] for w uniform on the unit sphere of C^2, as the radial FS
/// integral  int_0^inf log(1/(1+r^2)) 2r (1+r^2)^{-2} dr,  computed with
/// composite Simpson after r = tan(phi).
inline double radial_log_quadrature(std::size_t intervals = 200000) {
  const double a = 0.0;
  const double b = std::numbers::pi / 2;
  auto g = [](double phi) {
    if (phi >= std::numbers::pi / 2) return 0.0;
    const double r = std::tan(phi);
    const double s = 1.0 + r * r;
    // dr = (1 + r^2) dphi
    return std::log(1.0 / s) * 2.0 * r / (s * s) * s;
  };
  const double h = (b - a) / static_cast<double>(intervals);
  double sum = g(a) + g(b);
  for (std::size_t k = 1; k < intervals; ++k) sum += g(a + h * static_cast<double>(k)) * (k % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace elim::testing
