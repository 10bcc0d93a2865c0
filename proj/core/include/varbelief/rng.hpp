#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace varbelief {

// SplitMix64 (Steele, Lea & Flood 2014). The whole generator is these few
// lines, so any language can reproduce a stream bit for bit from the seed;
// that is the reason it lives here instead of behind <random>.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on (0, 1]; never 0, so -log(u) and Box-Muller stay finite.
  double uniform_unit() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes two uniforms per draw.
  double gaussian() {
    const double u1 = uniform_unit();
    const double u2 = uniform_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform integer in [0, n) by 128-bit multiply-shift.
  std::size_t uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("SplitMix64::uniform_index: n must be positive");
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Strictly positive point on the n-simplex: component-wise -log(uniform)
// draws (flat Dirichlet), normalized, floored at floor_mass, renormalized.
inline std::vector<double> sample_simplex(SplitMix64& rng, std::size_t n, double floor_mass) {
  if (n == 0) throw std::invalid_argument("sample_simplex: n must be positive");
  if (floor_mass < 0.0 || floor_mass * static_cast<double>(n) >= 1.0) {
    throw std::invalid_argument("sample_simplex: floor_mass must be in [0, 1/n)");
  }
  std::vector<double> mass(n);
  double sum = 0.0;
  for (double& m : mass) {
    m = -std::log(rng.uniform_unit());
    sum += m;
  }
  if (sum == 0.0) {  // every draw hit u == 1; keep the math defined
    for (double& m : mass) m = 1.0;
    sum = static_cast<double>(n);
  }
  for (double& m : mass) m /= sum;
  if (floor_mass > 0.0) {
    double floored_sum = 0.0;
    for (double& m : mass) {
      if (m < floor_mass) m = floor_mass;
      floored_sum += m;
    }
    for (double& m : mass) m /= floored_sum;
  }
  return mass;
}

// Inverse-CDF draw from nonnegative weights (need not be normalized).
inline std::size_t sample_categorical(SplitMix64& rng, std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("sample_categorical: negative weight");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("sample_categorical: all weights are zero");
  const double target = rng.uniform_unit() * total;
  double cum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cum += weights[i];
    if (cum >= target) return i;
  }
  return weights.size() - 1;  // unreachable when the sums round identically
}

}  // namespace varbelief
