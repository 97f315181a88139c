#pragma once

#include "gcx/types.hpp"

#include <cmath>
#include <cstdint>

namespace gcx {

// Deterministic splittable generator. Streams derived from the same seed with
// different labels are independent; the same (seed, label) always replays the
// same draws, so record streams are reproducible byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(splitmix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  Rng child(std::uint64_t label) const {
    return Rng(splitmix(state_ + 0x632be59bd9b4e019ull * (label + 1)));
  }

  std::uint64_t next_u64() {
    state_ = splitmix(state_);
    return state_;
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; two uniforms per draw keeps the stream layout trivial.
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Uniform over the solid ball of the given radius.
  Vec in_ball(int dim, double radius) {
    Vec dir(dim);
    double norm2 = 0.0;
    do {
      for (int i = 0; i < dim; ++i) dir[i] = gaussian();
      norm2 = dir.squaredNorm();
    } while (norm2 == 0.0);
    double r = radius * std::pow(uniform(), 1.0 / dim);
    return (r / std::sqrt(norm2)) * dir;
  }

 private:
  explicit Rng(std::uint64_t raw, int) : state_(raw) {}

  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::uint64_t state_;
};

}  // namespace gcx
