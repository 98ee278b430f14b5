#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sliceop {

// Deterministic random source. std::mt19937_64 is pinned by the standard,
// but the standard distributions are not; the draws here are hand-rolled so
// identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 usable bits.
  double uniform() { return std::ldexp(static_cast<double>(gen_() >> 11), -53); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; draws are paired internally.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    do {
      u = uniform();
    } while (u <= 0.0);
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double two_pi = 6.283185307179586476925286766559;
    spare_ = r * std::sin(two_pi * v);
    have_spare_ = true;
    return r * std::cos(two_pi * v);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sliceop
