#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sliceop/series.hpp"

namespace sliceop {

// Parameters of a regular Moebius transformation of the unit ball,
// phi_a * u = (1 - q conj(a))^{-*} * (a - q) * u.
struct MoebiusParams {
  Quaternion a;               // |a| < 1 - 1e-12
  Quaternion u{1.0, 0, 0, 0};  // unit factor on the right, ||u| - 1| < 1e-12
};

// Taylor coefficients of phi_a = (1 - q conj(a))^{-*} * (a - q) on the unit
// ball: c_0 = a and c_n = -(1-|a|^2) conj(a)^{n-1} for n >= 1; radius 1.
// Agrees with the star_reciprocal construction to roundoff.
Series mobius_series(const Quaternion& a, std::size_t n_max);

// phi_a * u: every coefficient of phi_a right-multiplied by the unit u.
Series automorphism(const MoebiusParams& params, std::size_t n_max);

// Taylor series of the classical disc automorphism
// z -> e^{I theta} (z - a)/(1 - conj(a) z) on the slice C_I, embedded back
// into H. The result is slice-preserving by construction: every coefficient
// lies in C_I.
Series slice_automorphism(std::complex<double> a, double theta, const ImaginaryUnit& I,
                          std::size_t n_max);

enum class MapClass { identity, elliptic, parabolic, hyperbolic, spherical_hyperbolic };
enum class FixedPointLocation { interior, boundary, boundary_sphere };

const char* to_string(MapClass type);
const char* to_string(FixedPointLocation location);

struct FixedPoint {
  Quaternion point;
  FixedPointLocation location;
  double multiplier = 0.0;  // |psi'| of the fitted slice map at the point
};

// Dynamical type of a slice-preserving Moebius self-map:
//   identity                 every point fixed
//   elliptic                 one interior fixed point (its reflection lies
//                            outside the closed ball and is not reported)
//   parabolic                one boundary fixed point (double root)
//   hyperbolic               two distinct boundary fixed points
//   spherical_hyperbolic     the boundary roots form a conjugate pair
//                            x +- y I with y > 0; the whole sphere x + y S
//                            is then fixed (both roots reported with the
//                            boundary_sphere label)
struct Classification {
  MapClass type = MapClass::identity;
  std::vector<FixedPoint> fixed_points;
  std::string note;  // nonempty when a heuristic decision was involved
};

// Fits a classical fractional linear map to the restriction of f to its
// preserved slice (three-point solve, residual <= 1e-8 on a ring of test
// points, boundary modulus 1 within 1e-6), then classifies by the roots of
// the fixed-point quadratic c z^2 + (d - a) z - b = 0. A double boundary
// root is detected through the relative discriminant (1e-9): truncation and
// fit noise split an analytic double root by its square root, so comparing
// root distances directly would be meaningless. A conjugate pair of
// boundary roots fixes the whole sphere x + y S (representation formula);
// this is confirmed by evaluating f near the sphere in two transverse
// slices before reporting spherical_hyperbolic.
// Throws NotSlicePreserving when no common slice exists and UnsupportedMap
// when f is not (a truncation of) such a map on the ball.
Classification classify(const Series& f);

// Iteration record of a non-elliptic Moebius self-map: iterates converge on
// compact subsets to the attracting boundary fixed point. trace[t] is the
// sup over a fixed 128-point grid of {|q| <= 0.5} (32 points in each of the
// slices i, j, k, (i+j+k)/sqrt(3)) of the distance |f^{(t+1))}(q) - limit|,
// where the iterated values are assembled from the two tracked slice orbits
// through the representation formula. Stops once the sup drops below tol.
// Throws PreconditionViolated for identity or elliptic input, NoConvergence
// when n_max iterations do not reach tol.
struct DenjoyWolffResult {
  Quaternion limit;
  std::vector<double> trace;
};
DenjoyWolffResult denjoy_wolff(const Series& f, double tol, std::size_t n_max);

}  // namespace sliceop
