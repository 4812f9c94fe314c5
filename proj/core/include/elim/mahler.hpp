#pragma once

// Mahler measure of a form on P(W), W = C^{l+1}:
//
//   Theta([f]) = integral over P(W) of log(|f|^2_FS / ||f||_2^2) d(omega_FS)
//
// with the Fubini-Study volume normalized to total mass 1. The integral is
// estimated by Monte Carlo over the unit sphere of W, where |f|^2_FS(w) is
// just |f(w)|^2. ||f||_2^2 is exact (monomials are orthogonal on the sphere).
//
// Sampling is split into fixed blocks of kSampleBlock points; block b draws
// from its own mt19937_64 seeded with (seed, b). Shards process whole blocks
// and per-block statistics are merged in block order, so the estimate does
// not depend on the shard count.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "elim/multipoly.hpp"
#include "elim/stability.hpp"

namespace elim {

inline constexpr std::size_t kSampleBlock = 4096;

struct ThetaEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// sum_alpha |c_alpha|^2 alpha! l! / (d+l)!, the mean of |f|^2 over the unit
/// sphere. DomainError unless f is homogeneous.
Rational l2_norm_sq(const MultiPoly& f);

ThetaEstimate theta(const MultiPoly& f, std::size_t samples, std::uint64_t seed, std::size_t shards = 1);

/// theta of lambda(t) . F; t > 0 is converted to an exact rational first.
ThetaEstimate theta_along_orbit(const MultiPoly& f, const OnePS& lambda, double t, std::size_t samples,
                                std::uint64_t seed, std::size_t shards = 1);

/// The individual integrand values theta averages, in sample order.
std::vector<double> theta_samples(const MultiPoly& f, std::size_t samples, std::uint64_t seed);

/// Monte Carlo mean of an arbitrary function over the unit sphere of
/// C^{dim}, with the same block/seed schedule as theta.
ThetaEstimate sphere_average(std::size_t dim,
                             const std::function<double(std::span<const std::complex<double>>)>& integrand,
                             std::size_t samples, std::uint64_t seed, std::size_t shards = 1);

}  // namespace elim
