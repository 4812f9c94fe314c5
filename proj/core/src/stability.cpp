#include "elim/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace elim {

namespace {

void check_length(const MultiPoly& f, const OnePS& lambda) {
  if (lambda.weights.size() != f.var_count()) {
    throw std::invalid_argument("one-parameter subgroup has " + std::to_string(lambda.weights.size()) +
                                " weights for " + std::to_string(f.var_count()) + " variables");
  }
}

long exponent_of(const Exponents& beta, const OnePS& lambda) {
  long pairing = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) pairing += lambda.weights[k] * static_cast<long>(beta[k]);
  return -pairing;
}

}  // namespace

WeightDecomposition act_decompose(const MultiPoly& f, const OnePS& lambda) {
  check_length(f, lambda);
  WeightDecomposition parts;
  for (const auto& [beta, c] : f.terms()) {
    auto [it, inserted] = parts.try_emplace(exponent_of(beta, lambda), f.var_count());
    it->second.add_term(beta, c);
  }
  return parts;
}

long weight(const MultiPoly& f, const OnePS& lambda) {
  if (f.is_zero()) throw DomainError("weight of the zero polynomial is undefined");
  return act_decompose(f, lambda).begin()->first;
}

MultiPoly limit_polynomial(const MultiPoly& f, const OnePS& lambda) {
  if (f.is_zero()) throw DomainError("limit of the zero polynomial is undefined");
  return act_decompose(f, lambda).begin()->second;
}

MultiPoly act(const MultiPoly& f, const OnePS& lambda, const Rational& t) {
  if (t == 0) throw DomainError("act: t must be nonzero");
  check_length(f, lambda);
  MultiPoly out(f.var_count());
  for (const auto& [beta, c] : f.terms()) {
    const long e = exponent_of(beta, lambda);
    Rational scale = 1;
    Rational base = e >= 0 ? t : Rational(1 / t);
    for (long k = 0; k < std::labs(e); ++k) scale *= base;
    out.add_term(beta, c * scale);
  }
  return out;
}

OnePS induced_coefficient_weights(std::size_t n, unsigned d, const OnePS& ambient) {
  if (ambient.weights.size() != n + 1) throw std::invalid_argument("ambient weights must have length n+1");
  OnePS out;
  for (const auto& alpha : monomial_basis(n + 1, d)) {
    long pairing = 0;
    for (std::size_t k = 0; k <= n; ++k) pairing += ambient.weights[k] * static_cast<long>(alpha[k]);
    out.weights.push_back(-pairing);
  }
  return out;
}

double slope_fit(const MultiPoly& f, const OnePS& lambda, std::span<const double> t_values) {
  if (f.is_zero()) throw DomainError("slope of the zero polynomial is undefined");
  if (t_values.size() < 2) throw DomainError("slope_fit needs at least two sample points");
  check_length(f, lambda);

  // log ||lambda(t) F||^2 = logsumexp_beta(log c_beta^2 + 2 e_beta log t)
  std::vector<std::pair<double, long>> terms;
  for (const auto& [beta, c] : f.terms()) {
    const double mag = std::abs(c.get_d());
    terms.emplace_back(2.0 * std::log(mag), exponent_of(beta, lambda));
  }

  std::vector<double> xs;
  std::vector<double> ys;
  for (double t : t_values) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("slope_fit: t values must lie in (0, 1)");
    const double log_t2 = 2.0 * std::log(t);
    double peak = -std::numeric_limits<double>::infinity();
    for (auto [lc, e] : terms) peak = std::max(peak, lc + e * log_t2);
    double sum = 0.0;
    for (auto [lc, e] : terms) sum += std::exp(lc + e * log_t2 - peak);
    xs.push_back(log_t2);
    ys.push_back(peak + std::log(sum));
  }

  const double k = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw DomainError("slope_fit: sample points must be distinct");
  return sxy / sxx;
}

}  // namespace elim
