#include "elim/complexes.hpp"

#include <string>
#include <utility>

namespace elim {

BasedComplex::BasedComplex(std::vector<std::size_t> dims, std::vector<Matrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
  if (dims_.empty()) throw std::invalid_argument("complex needs at least one term");
  if (boundaries_.size() + 1 != dims_.size()) {
    throw std::invalid_argument("complex: expected " + std::to_string(dims_.size() - 1) +
                                " boundaries, got " + std::to_string(boundaries_.size()));
  }
  for (std::size_t i = 0; i < boundaries_.size(); ++i) {
    const Matrix& b = boundaries_[i];
    if (b.rows() != dims_[i + 1] || b.cols() != dims_[i]) {
      throw std::invalid_argument("complex: boundary " + std::to_string(i) + " has shape " +
                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                                  ", expected " + std::to_string(dims_[i + 1]) + "x" +
                                  std::to_string(dims_[i]));
    }
  }
}

BasedComplex BasedComplex::scaled(const Rational& mu) const {
  std::vector<Matrix> out;
  out.reserve(boundaries_.size());
  for (const auto& b : boundaries_) out.push_back(mu * b);
  return BasedComplex(dims_, std::move(out));
}

bool is_complex(const BasedComplex& c) {
  const auto& d = c.boundaries();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (!(d[i + 1] * d[i]).is_zero()) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> boundary_ranks(const BasedComplex& c) {
  std::vector<std::size_t> out;
  out.reserve(c.boundaries().size());
  for (const auto& b : c.boundaries()) out.push_back(rank(b));
  return out;
}

bool exact_given_ranks(const BasedComplex& c, const std::vector<std::size_t>& kappa) {
  const auto& r = c.dims();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::size_t in = i == 0 ? 0 : kappa[i - 1];
    const std::size_t out = i < kappa.size() ? kappa[i] : 0;
    if (in + out != r[i]) return false;
  }
  return true;
}

std::vector<std::size_t> require_exact(const BasedComplex& c) {
  if (!is_complex(c)) throw DomainError("boundary maps do not compose to zero");
  auto kappa = boundary_ranks(c);
  if (!exact_given_ranks(c, kappa)) throw DomainError("complex is not exact; torsion undefined");
  if (c.dims().front() == 0 || c.dims().back() == 0) {
    throw DomainError("complex has a zero-dimensional edge term; trim it first");
  }
  return kappa;
}

Matrix standard_vectors(std::size_t dim, const std::vector<std::size_t>& indices) {
  Matrix out(dim, indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) out(indices[k], k) = 1;
  return out;
}

TorsionResult assemble(const BasedComplex& c, std::span<const Matrix> sections,
                       std::vector<std::size_t> kappa) {
  const auto& d = c.boundaries();
  const auto& r = c.dims();
  const std::size_t n = c.top_index();
  if (sections.size() != n + 1) {
    throw std::invalid_argument("torsion: expected " + std::to_string(n + 1) + " sections");
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (sections[i].rows() != r[i] || sections[i].cols() != kappa[i]) {
      throw std::invalid_argument("torsion: section " + std::to_string(i) + " must be " +
                                  std::to_string(r[i]) + "x" + std::to_string(kappa[i]));
    }
  }

  TorsionResult out;
  out.n_odd = n % 2 == 1;
  Rational product = 1;

  const Rational s0 = det(sections[0]);
  if (s0 == 0) throw DomainError("torsion: section S_0 is singular");
  out.factor_log.push_back({0, s0, -1});
  product /= s0;

  for (std::size_t k = 1; k <= n + 1; ++k) {
    Matrix block = d[k - 1] * sections[k - 1];
    if (k <= n) block = block.hconcat(sections[k]);
    const Rational dk = det(block);
    if (dk == 0) {
      throw DomainError("torsion: sections " + std::to_string(k - 1) + "/" + std::to_string(k) +
                        " do not span term " + std::to_string(k));
    }
    const int exponent = k % 2 == 1 ? 1 : -1;
    out.factor_log.push_back({k, dk, exponent});
    if (exponent > 0) {
      product *= dk;
    } else {
      product /= dk;
    }
  }
  out.value = out.n_odd ? Rational(1 / product) : product;
  out.kappa = std::move(kappa);
  return out;
}

}  // namespace

bool is_exact(const BasedComplex& c) {
  if (!is_complex(c)) throw DomainError("boundary maps do not compose to zero");
  return exact_given_ranks(c, boundary_ranks(c));
}

TorsionResult torsion(const BasedComplex& c) {
  auto kappa = require_exact(c);
  const auto& d = c.boundaries();
  const std::size_t n = c.top_index();

  std::vector<Matrix> sections;
  sections.reserve(n + 1);
  sections.push_back(Matrix::identity(c.dims()[0]));
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix image = d[i] * sections[i];
    sections.push_back(standard_vectors(c.dims()[i + 1], complete_to_basis(image)));
  }
  return assemble(c, sections, std::move(kappa));
}

TorsionResult torsion_with_sections(const BasedComplex& c, std::span<const Matrix> sections) {
  return assemble(c, sections, require_exact(c));
}

TrimmedComplex trim(const BasedComplex& c) {
  const auto& r = c.dims();
  std::size_t first = 0;
  while (first < r.size() && r[first] == 0) ++first;
  if (first == r.size()) throw DomainError("trim: every term is zero-dimensional");
  std::size_t last = r.size() - 1;
  while (r[last] == 0) --last;

  std::vector<std::size_t> dims(r.begin() + first, r.begin() + last + 1);
  std::vector<Matrix> boundaries(c.boundaries().begin() + first, c.boundaries().begin() + last);
  return {BasedComplex(std::move(dims), std::move(boundaries)), first, r.size() - 1 - last};
}

long scaling_exponent(std::span<const std::size_t> dims) {
  long sum = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const long term = static_cast<long>(i) * static_cast<long>(dims[i]);
    sum += i % 2 == 0 ? term : -term;
  }
  // dims.size() = n + 2, so (-1)^{n+1} = (-1)^{dims.size() - 1}.
  return dims.size() % 2 == 0 ? -sum : sum;
}

}  // namespace elim
