#pragma once

#include <cstdint>
#include <vector>

#include "sliceop/series.hpp"

namespace sliceop {

// Sampling layout for the quadrature-based norms. angles must be a power of
// two >= 4 (the circle means are then exact for trigonometric polynomials of
// degree below angles); radii must be strictly inside (0, 1), ascending.
struct QuadratureConfig {
  std::size_t angles = 1024;
  std::vector<double> radii = {0.5, 0.9, 0.99};
  std::size_t sphere_samples = 64;
  std::uint64_t seed = cfg::default_seed;
};

// Coefficient form of the H^2 norm: sqrt(sum |a_n|^2).
double h2_norm(const Series& f);

// (1/2pi) integral of |f(r e^{I theta})|^p over the circle, by the
// trapezoid rule on `angles` nodes. For p = 2 this equals sum |a_n|^2 r^{2n}
// for every I (slice independence; tested).
double circle_mean_p(const Series& f, double r, const ImaginaryUnit& I, double p,
                     std::size_t angles);

// H^p norm estimate: max over sampled slices of the circle mean at the top
// radius (p-means grow with r by the maximum modulus principle; violations
// beyond slack indicate a broken input and throw). Requires p >= 1 and
// f.radius >= 1. p = infinity falls through to sup_norm_estimate.
double hp_norm(const Series& f, double p, const QuadratureConfig& quad = {});

// Sampled sup of |f| over the unit ball (over f's own disc when its radius
// is below 1). |f|^2 is subharmonic on every slice, so only the top radius
// needs sampling. When f preserves a slice the estimate is the 1-D maximum
// on that slice circle over 4096 dense nodes; otherwise a sphere/angle grid.
double sup_norm_estimate(const Series& f, const QuadratureConfig& quad = {});

// Evidence for an inequality lhs <= rhs (+ small slack folded into pass).
struct BoundCheck {
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Pointwise growth bound at q (|q| < 1, else DomainError):
//   p = 2:        |f(q)| <= (1-|q|^2)^{-1/2} ||f||_2,
//   1 <= p < inf: |f(q)| <= sqrt(2) (1-|q|^2)^{-1/p} ||f||_p,
//   p = inf:      |f(q)| <= ||f||_inf.
BoundCheck growth_bound_check(const Series& f, double p, const Quaternion& q,
                              const QuadratureConfig& quad = {});

// Coefficient bound derived from the Cauchy estimates:
//   p < inf: |a_n| <= sqrt(2) e^{1/p} (1 + n p/2)^{1/p} ||f||_p,
//   p = inf: |a_n| <= ||f||_inf.
BoundCheck cauchy_coefficient_check(const Series& f, double p, std::size_t n,
                                    const QuadratureConfig& quad = {});

// Finite section of a composition operator on coefficient vectors.
// right_linear_C realizes f -> sum_n phi^{*n} f_n (entries multiply incoming
// coefficients from the left, so the action commutes with right scalar
// multiplication). left_linear_D realizes f -> sum_n f_n * phi^{*n}; its
// entries are the powers of phi^c and apply() conjugates on the way in and
// out, which is the same map by the conjugation identity.
enum class OperatorSide { right_linear_C, left_linear_D };

class OperatorMatrix {
 public:
  OperatorMatrix(std::size_t dim, OperatorSide side)
      : dim_(dim), side_(side), m_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  OperatorSide side() const { return side_; }

  Quaternion& at(std::size_t r, std::size_t c) { return m_[r * dim_ + c]; }
  const Quaternion& at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }

  // Applies the represented operator to a coefficient vector (padded or
  // truncated to dim as needed).
  std::vector<Quaternion> apply(const std::vector<Quaternion>& v) const;

 private:
  std::size_t dim_;
  OperatorSide side_;
  std::vector<Quaternion> m_;
};

// (n_max+1)-dimensional section with column n the coefficients of phi^{*n}
// (phi^c for the left-linear side). phi must be defined on the unit ball
// with sampled sup <= 1 + 1e-9 (NotSelfMap otherwise).
OperatorMatrix composition_matrix(const Series& phi, std::size_t n_max, OperatorSide side);

// Largest singular value of the section, as a real-linear operator: each
// quaternion entry w+xi+yj+zk embeds as the 2x2 complex block
// [[w+xi, y+zi], [-(y-zi), w-xi]] and the 2(dim) x 2(dim) complex matrix is
// run through power iteration on M*M (relative tolerance 1e-10, cap 10000,
// seeded start). Throws NoConvergence when the cap is hit with relative
// residual above 1e-6.
double operator_norm(const OperatorMatrix& m);

// Reproducing kernel data at w (|w| < 1): coefficients conj(w)^n.
struct KernelVector {
  Quaternion w;
  std::vector<Quaternion> coeffs;
};
KernelVector kernel_vector(const Quaternion& w, std::size_t n_max);
Series kernel_series(const Quaternion& w, std::size_t n_max);

// Kernel-ratio lower bound for the composition operator norm of a
// slice-preserving phi: max over swept w = r e^{I theta} (r up to 0.999,
// `samples` angles, w = 0 included) of sqrt((1-|w|^2)/(1-|phi(w)|^2)).
double norm_lower_bound(const Series& phi, std::size_t samples = 64);

// Subordination check for phi(0) = 0: both composition variants contract
// the H^2 norm. Truncation only removes coefficient mass, so the measured
// norms underestimate the analytic ones and the exact bound ||f||_2 applies
// with a flat 1e-9 roundoff slack; margin is bound minus the larger norm.
// Requires deg f <= n_max/4 (the kept window then carries the bulk of the
// composition) and a sampled self-map bound sup phi <= 1 + 1e-9.
struct LittlewoodCheck {
  bool pass = false;
  double norm_right = 0.0;
  double norm_left = 0.0;
  double bound = 0.0;
  double margin = 0.0;
};
LittlewoodCheck littlewood_check(const Series& f, const Series& phi, std::size_t n_max);

// Tail estimate behind the compactness argument: for sampled s = ||phi|| < 1
// the section remainder norm is measured on a 4x degree window (columns
// 0..n_max zeroed out of the (4 n_max)-section) and compared against
// s^{n_max+1} / sqrt(1-s^2).
struct TailBoundCheck {
  bool pass = false;
  double bound = 0.0;
  double measured = 0.0;
};
TailBoundCheck tail_bound_check(const Series& phi, std::size_t n_max);

// *-multiplication by a Moebius factor is an H^2 isometry on both sides;
// checked within the truncation tail of the factor.
struct IsometryCheck {
  bool pass = false;
  double left = 0.0;
  double right = 0.0;
  double base = 0.0;
  double tol = 0.0;
};
IsometryCheck multiplier_isometry_check(const Series& f, const Quaternion& a,
                                        std::size_t n_max);

}  // namespace sliceop
