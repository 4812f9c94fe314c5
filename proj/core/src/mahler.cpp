#include "elim/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace elim {

namespace {

Integer factorial(unsigned k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

struct RunningStats {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const RunningStats& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(count + o.count);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.count) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / total;
    count += o.count;
  }
};

// Calls sink(point) for each sample of block b.
template <typename Sink>
void sample_block(std::size_t dim, std::uint64_t seed, std::size_t block, std::size_t count, Sink&& sink) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::complex<double>> w(dim);
  for (std::size_t s = 0; s < count; ++s) {
    double norm_sq = 0.0;
    for (auto& z : w) {
      const double re = normal(rng);
      const double im = normal(rng);
      z = {re, im};
      norm_sq += re * re + im * im;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& z : w) z *= inv;
    sink(std::span<const std::complex<double>>(w));
  }
}

std::size_t block_count(std::size_t samples) { return (samples + kSampleBlock - 1) / kSampleBlock; }

std::size_t block_size(std::size_t samples, std::size_t b) {
  return std::min(kSampleBlock, samples - b * kSampleBlock);
}

// Dense float copy of a polynomial for fast repeated evaluation.
class CompiledPoly {
 public:
  explicit CompiledPoly(const MultiPoly& p) : vars_(p.var_count()) {
    for (const auto& [e, c] : p.terms()) {
      coeffs_.push_back(c.get_d());
      exps_.insert(exps_.end(), e.begin(), e.end());
      for (auto k : e) max_power_ = std::max(max_power_, k);
    }
  }

  std::complex<double> operator()(std::span<const std::complex<double>> w) const {
    std::vector<std::complex<double>> powers(vars_ * (max_power_ + 1));
    for (std::size_t v = 0; v < vars_; ++v) {
      powers[v * (max_power_ + 1)] = 1.0;
      for (unsigned k = 1; k <= max_power_; ++k) {
        powers[v * (max_power_ + 1) + k] = powers[v * (max_power_ + 1) + k - 1] * w[v];
      }
    }
    std::complex<double> out = 0.0;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
      std::complex<double> term = coeffs_[t];
      for (std::size_t v = 0; v < vars_; ++v) term *= powers[v * (max_power_ + 1) + exps_[t * vars_ + v]];
      out += term;
    }
    return out;
  }

 private:
  std::size_t vars_;
  unsigned max_power_ = 0;
  std::vector<double> coeffs_;
  std::vector<unsigned> exps_;
};

// f divided by its leading coefficient, so that theta(c f) and theta(f)
// evaluate identical floating-point integrands.
MultiPoly normalized(const MultiPoly& f) {
  MultiPoly out = f;
  out *= Rational(1 / f.terms().begin()->second);
  return out;
}

void check_theta_input(const MultiPoly& f, std::size_t samples) {
  if (f.is_zero()) throw DomainError("theta: zero polynomial");
  if (!homogeneous_degree(f)) throw DomainError("theta: polynomial is not homogeneous");
  if (f.var_count() == 0) throw DomainError("theta: polynomial needs at least one variable");
  if (samples < 2) throw DomainError("theta: at least two samples required");
}

std::function<double(std::span<const std::complex<double>>)> log_ratio_integrand(const MultiPoly& f) {
  const MultiPoly g = normalized(f);
  const double log_norm = std::log(l2_norm_sq(g).get_d());
  return [eval = CompiledPoly(g), log_norm](std::span<const std::complex<double>> w) {
    return std::log(std::norm(eval(w))) - log_norm;
  };
}

}  // namespace

Rational l2_norm_sq(const MultiPoly& f) {
  const auto d = homogeneous_degree(f);
  if (!d) throw DomainError("l2_norm_sq: polynomial is not homogeneous");
  if (f.var_count() == 0) {
    const Rational c = f.coefficient({});
    return c * c;
  }
  const unsigned l = static_cast<unsigned>(f.var_count() - 1);
  const Integer denom = factorial(*d + l);
  const Integer lfac = factorial(l);
  Rational sum = 0;
  for (const auto& [alpha, c] : f.terms()) {
    Integer weight = lfac;
    for (auto a : alpha) weight *= factorial(a);
    sum += c * c * Rational(weight, denom);
  }
  sum.canonicalize();
  return sum;
}

ThetaEstimate sphere_average(std::size_t dim,
                             const std::function<double(std::span<const std::complex<double>>)>& integrand,
                             std::size_t samples, std::uint64_t seed, std::size_t shards) {
  if (samples < 2) throw DomainError("sphere_average: at least two samples required");
  if (dim == 0) throw DomainError("sphere_average: dimension must be positive");
  const std::size_t blocks = block_count(samples);
  std::vector<RunningStats> per_block(blocks);
  auto run = [&](std::size_t first, std::size_t last) {
    for (std::size_t b = first; b < last; ++b) {
      RunningStats stats;
      sample_block(dim, seed, b, block_size(samples, b),
                   [&](std::span<const std::complex<double>> w) { stats.push(integrand(w)); });
      per_block[b] = stats;
    }
  };

  shards = std::clamp<std::size_t>(shards, 1, blocks);
  if (shards == 1) {
    run(0, blocks);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (blocks + shards - 1) / shards;
    for (std::size_t s = 0; s < shards; ++s) {
      const std::size_t first = s * chunk;
      const std::size_t last = std::min(blocks, first + chunk);
      if (first < last) pool.emplace_back(run, first, last);
    }
  }

  RunningStats total;
  for (const auto& b : per_block) total.merge(b);
  ThetaEstimate out;
  out.mean = total.mean;
  out.std_error = std::sqrt(std::max(0.0, total.m2) / static_cast<double>(total.count - 1) /
                            static_cast<double>(total.count));
  out.samples = samples;
  out.seed = seed;
  return out;
}

ThetaEstimate theta(const MultiPoly& f, std::size_t samples, std::uint64_t seed, std::size_t shards) {
  check_theta_input(f, samples);
  return sphere_average(f.var_count(), log_ratio_integrand(f), samples, seed, shards);
}

ThetaEstimate theta_along_orbit(const MultiPoly& f, const OnePS& lambda, double t, std::size_t samples,
                                std::uint64_t seed, std::size_t shards) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("theta_along_orbit: t must be positive and finite");
  return theta(act(f, lambda, Rational(t)), samples, seed, shards);
}

std::vector<double> theta_samples(const MultiPoly& f, std::size_t samples, std::uint64_t seed) {
  check_theta_input(f, samples);
  const auto integrand = log_ratio_integrand(f);
  std::vector<double> out;
  out.reserve(samples);
  for (std::size_t b = 0; b < block_count(samples); ++b) {
    sample_block(f.var_count(), seed, b, block_size(samples, b),
                 [&](std::span<const std::complex<double>> w) { out.push_back(integrand(w)); });
  }
  return out;
}

}  // namespace elim
