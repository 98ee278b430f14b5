#pragma once

#include <cstdint>

// Numeric thresholds shared across the library. These are deliberate,
// documented constants rather than knobs scattered through call sites;
// adjust before use if an application needs different regimes.
namespace sliceop::cfg {

// |q| below this counts as zero for inversion purposes.
inline constexpr double division_epsilon = 1e-300;
// Unit-vector and orthogonality checks (imaginary units, slice bases).
inline constexpr double unit_tol = 1e-13;
// Coefficient-level comparisons: slice membership, symmetrization realness.
inline constexpr double coeff_tol = 1e-12;
// normalize() strips trailing coefficients below this magnitude.
inline constexpr double trailing_tol = 1e-15;
// Default seed used where an operation needs internal sampling.
inline constexpr std::uint64_t default_seed = 42;

}  // namespace sliceop::cfg
