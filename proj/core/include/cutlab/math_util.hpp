#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace cutlab {

using Rng = std::mt19937_64;

// softplus_beta(x) = log(1 + exp(beta*x)) / beta. Smooth max(0, x); the
// linear and zero branches avoid overflow for |beta*x| beyond ~30.
inline double softplus(double x, double beta) {
  const double bx = beta * x;
  if (bx > 30.0) return x;
  if (bx < -30.0) return std::exp(bx) / beta;
  return std::log1p(std::exp(bx)) / beta;
}

// d/dx softplus_beta(x) = sigmoid(beta*x)
inline double softplus_derivative(double x, double beta) {
  const double bx = beta * x;
  if (bx > 30.0) return 1.0;
  if (bx < -30.0) return std::exp(bx);
  return 1.0 / (1.0 + std::exp(-bx));
}

inline double clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

inline double sq(double v) { return v * v; }

// Standard normal CDF.
inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// Standard normal PDF.
inline double normal_pdf(double x) {
  static const double inv_sqrt_2pi = 0.3989422804014327;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

// Inverse of the standard normal CDF (Acklam's rational approximation
// refined with one Halley step; ~1e-15 absolute error on (0,1)).
double normal_quantile(double p);

// FNV-1a 64-bit hash, used for config fingerprints and seed derivation.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Derives an independent stream seed from a master seed and a label.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label) {
  return fnv1a64(label, master ^ 0x9e3779b97f4a7c15ull);
}

}  // namespace cutlab
