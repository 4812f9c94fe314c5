#include "elim/koszul.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace elim {

void KoszulSpec::validate() const {
  if (degrees.size() != n + 1) {
    throw std::invalid_argument("koszul: expected " + std::to_string(n + 1) + " degrees, got " +
                                std::to_string(degrees.size()));
  }
  if (n + 1 > 31) throw std::invalid_argument("koszul: too many forms");
  for (auto d : degrees) {
    if (d == 0) throw std::invalid_argument("koszul: degrees must be positive");
  }
}

namespace {

long subset_degree(const KoszulSpec& spec, std::uint32_t subset) {
  long sum = 0;
  for (std::size_t k = 0; k <= spec.n; ++k) {
    if (subset & (1u << k)) sum += spec.degrees[k];
  }
  return sum;
}

// All j-subsets of {0..n} as bitmasks; increasing mask value is colex order.
std::vector<std::uint32_t> subsets_of_size(std::size_t n, std::size_t j) {
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = 1u << (n + 1);
  for (std::uint32_t s = 0; s < limit; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == j) out.push_back(s);
  }
  return out;
}

}  // namespace

std::size_t term_dimension(const KoszulSpec& spec, std::size_t j) {
  spec.validate();
  if (j > spec.n + 1) return 0;
  std::size_t total = 0;
  for (auto s : subsets_of_size(spec.n, j)) {
    const long deg = spec.twist - subset_degree(spec, s);
    if (deg >= 0) total += binomial(static_cast<std::size_t>(deg) + spec.n, spec.n);
  }
  return total;
}

long chi(const KoszulSpec& spec) {
  long sum = 0;
  for (std::size_t j = 0; j <= spec.n + 1; ++j) {
    const long term = static_cast<long>(j) * static_cast<long>(term_dimension(spec, j));
    sum += j % 2 == 1 ? term : -term;
  }
  return sum;
}

long macaulay_bound(std::size_t n, std::span<const unsigned> degrees) {
  const long sum = std::accumulate(degrees.begin(), degrees.end(), 0L);
  return sum - static_cast<long>(n);
}

std::vector<KoszulBasisElement> koszul_basis(const KoszulSpec& spec, std::size_t j) {
  spec.validate();
  std::vector<KoszulBasisElement> out;
  if (j > spec.n + 1) return out;
  for (auto s : subsets_of_size(spec.n, j)) {
    const long deg = spec.twist - subset_degree(spec, s);
    if (deg < 0) continue;
    for (auto& mono : monomial_basis(spec.n + 1, static_cast<unsigned>(deg))) {
      out.push_back({s, std::move(mono)});
    }
  }
  return out;
}

BasedComplex build_full_complex(const KoszulSpec& spec, std::span<const MultiPoly> forms) {
  spec.validate();
  const std::size_t n = spec.n;
  if (forms.size() != n + 1) {
    throw DomainError("koszul: expected " + std::to_string(n + 1) + " forms, got " +
                      std::to_string(forms.size()));
  }
  for (std::size_t k = 0; k <= n; ++k) {
    if (forms[k].var_count() != n + 1) {
      throw DomainError("koszul: form " + std::to_string(k) + " must be in " +
                        std::to_string(n + 1) + " variables");
    }
    const auto d = homogeneous_degree(forms[k]);
    if (!forms[k].is_zero() && (!d || *d != spec.degrees[k])) {
      throw DomainError("koszul: form " + std::to_string(k) + " is not homogeneous of degree " +
                        std::to_string(spec.degrees[k]));
    }
  }

  // Term i holds |S| = n+1-i.
  std::vector<std::vector<KoszulBasisElement>> bases(n + 2);
  std::vector<std::size_t> dims(n + 2);
  for (std::size_t i = 0; i <= n + 1; ++i) {
    bases[i] = koszul_basis(spec, n + 1 - i);
    dims[i] = bases[i].size();
  }

  std::vector<Matrix> boundaries;
  boundaries.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const auto& source = bases[i];
    const auto& target = bases[i + 1];
    std::map<std::pair<std::uint32_t, Exponents>, std::size_t> row_of;
    for (std::size_t r = 0; r < target.size(); ++r) row_of.emplace(std::pair{target[r].subset, target[r].monomial}, r);

    Matrix d(target.size(), source.size());
    Exponents shifted(n + 1);
    for (std::size_t col = 0; col < source.size(); ++col) {
      const auto& [subset, alpha] = source[col];
      int position = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        if (!(subset & (1u << k))) continue;
        const int sign = position % 2 == 0 ? 1 : -1;
        ++position;
        const std::uint32_t smaller = subset & ~(1u << k);
        for (const auto& [gamma, c] : forms[k].terms()) {
          for (std::size_t v = 0; v <= n; ++v) shifted[v] = alpha[v] + gamma[v];
          const std::size_t row = row_of.at({smaller, shifted});
          if (sign > 0) {
            d(row, col) += c;
          } else {
            d(row, col) -= c;
          }
        }
      }
    }
    boundaries.push_back(std::move(d));
  }
  return BasedComplex(std::move(dims), std::move(boundaries));
}

BasedComplex build_complex(const KoszulSpec& spec, std::span<const MultiPoly> forms) {
  spec.validate();
  if (spec.twist < macaulay_bound(spec)) {
    throw DomainError("koszul: twist " + std::to_string(spec.twist) + " is below the Macaulay bound " +
                      std::to_string(macaulay_bound(spec)));
  }
  return trim(build_full_complex(spec, forms)).complex;
}

}  // namespace elim
