#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace ecdetect {

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

/// Uniform on the unit circle |z| = 1.
inline std::complex<double> random_unit_circle(Rng& rng) {
  return std::polar(1.0, 2.0 * std::numbers::pi * uniform01(rng));
}

/// Uniform on the closed unit disc.
inline std::complex<double> random_unit_disc(Rng& rng) {
  const double r = std::sqrt(uniform01(rng));
  return std::polar(r, 2.0 * std::numbers::pi * uniform01(rng));
}

/// Standard complex Gaussian (independent real and imaginary parts).
inline std::complex<double> random_gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  const double re = n(rng);
  return {re, n(rng)};
}

/// Derive an independent seed, e.g. per suspect or per component
/// (splitmix64 finalizer over seed and stream).
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ecdetect
