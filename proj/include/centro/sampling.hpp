#pragma once

#include "centro/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace centro {

/// Seeded generator with a fixed bits-to-double mapping, so streams are
/// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() {
    if (hasSpare_) {
      hasSpare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    hasSpare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

  Vec normalVector(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool hasSpare_ = false;
};

/// Radical inverse of `index` in base `base`.
inline double radicalInverse(std::uint64_t index, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
    f *= inv;
  }
  return r;
}

inline int nthPrime(int i) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  if (i < 0 || i >= static_cast<int>(std::size(primes))) throw PreconditionError("Halton dimension too large");
  return primes[i];
}

/// Point `index` (0-based) of the d-dimensional Halton sequence, skipping the origin.
inline Vec halton(std::uint64_t index, int d) {
  Vec v(d);
  for (int i = 0; i < d; ++i) v[i] = radicalInverse(index + 1, nthPrime(i));
  return v;
}

/// Deterministic low-discrepancy unit vectors in R^n (Halton mapped through
/// Box-Muller). For n = 1 the two directions alternate.
inline std::vector<Vec> sphereDirections(int n, int count) {
  if (n < 1 || count < 0) throw PreconditionError("bad direction request");
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(count));
  if (n == 1) {
    for (int i = 0; i < count; ++i) out.push_back(Vec::Constant(1, i % 2 == 0 ? 1.0 : -1.0));
    return out;
  }
  const int pairs = (n + 1) / 2;
  for (int i = 0; i < count; ++i) {
    const Vec u = halton(static_cast<std::uint64_t>(i), 2 * pairs);
    Vec v(n);
    for (int p = 0; p < pairs; ++p) {
      const double r = std::sqrt(-2.0 * std::log(1.0 - u[2 * p]));
      const double a = 2.0 * M_PI * u[2 * p + 1];
      v[2 * p] = r * std::cos(a);
      if (2 * p + 1 < n) v[2 * p + 1] = r * std::sin(a);
    }
    out.push_back(v.normalized());
  }
  return out;
}

}  // namespace centro
