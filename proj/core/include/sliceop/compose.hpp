#pragma once

#include <cstdint>
#include <vector>

#include "sliceop/series.hpp"

namespace sliceop {

// The six composition operations on truncated series. With f = sum q^n a_n
// and phi a series (b_0 = phi(0)):
//   odot_right   f o. phi  = sum_n phi^{*n} a_n
//   odot_left    f .o phi  = sum_n a_n * phi^{*n}
//   vlacci_right Taylor composition: c_0 = f(b_0),
//                c_n = (1/n!) sum_d B_{n,d}(1! b_1, ..., n! b_n) f^(d)(b_0)
//   vlacci_left  same with the derivative values on the left of B_{n,d}
//   bullet_up    conjugate-dual of vlacci_left:
//                regular_conjugate(compose(f^c, phi^c, vlacci_left))
//   bullet_down  regular_conjugate(compose(f^c, phi^c, vlacci_right))
// The two odot forms agree when phi(0) = 0 and f, phi share a slice with real
// interplay; in general all six differ.
enum class CompositionVariant {
  odot_right,
  odot_left,
  vlacci_right,
  vlacci_left,
  bullet_up,
  bullet_down,
};

// Noncommutative Bell polynomials of quaternion arguments q_1..q_n. Two
// independent routes are kept deliberately:
//   rows:  full-row recursion B_{m+1} = sum_k C(m,k) B_{m-k} q_{k+1}, B_0 = 1
//   parts: homogeneous B_{n,d} by the explicit sum over strictly decreasing
//          chains n > n_2 > ... > n_d >= 1 with coefficient
//          C(n-1,n_2) C(n_2-1,n_3) ... C(n_{d-1}-1,n_d) and ordered factors
//          q_{n_d} q_{n_{d-1}-n_d} ... q_{n_2-n_3} q_{n-n_2}
// so that row(n) == sum_d part(n,d) ties the two formulas together (tested).
// Chain enumeration is exponential in n; construction refuses args longer
// than 22 entries. The composition code below uses bell_parts instead.
struct BellTable {
  std::size_t n_max = 0;
  std::vector<Quaternion> rows;       // rows[n-1] = B_n, n = 1..n_max
  std::vector<Quaternion> parts_tri;  // triangular, see part()

  const Quaternion& row(std::size_t n) const { return rows.at(n - 1); }
  const Quaternion& part(std::size_t n, std::size_t d) const {
    return parts_tri.at((n - 1) * n / 2 + (d - 1));
  }
};

BellTable bell_table(const std::vector<Quaternion>& args);

// B_{n,d} for n = 0..n_max, d = 0..n via the homogeneous-degree recursion
// B_{n,d} = sum_{k=0}^{n-1} C(n-1,k) B_{n-1-k,d-1} q_{k+1}. Polynomial cost,
// used by the Taylor composition paths; agrees with BellTable::part (tested).
std::vector<std::vector<Quaternion>> bell_parts(const std::vector<Quaternion>& args,
                                                std::size_t n_max);

// n! exactly in 64-bit integers through 20!, floating-point recursion above.
double factorial(std::size_t n);

// *-power phi^{*n} truncated to degree n_max (phi^{*0} = 1).
Series star_power(const Series& phi, std::size_t n, std::size_t n_max);

// Optional per-coefficient truncation-error report for the Taylor variants.
// The values are a heuristic geometric continuation of the last retained
// derivative term; exact zero when f is a polynomial evaluated well inside
// its radius. Left untouched by the odot variants.
struct VlacciEstimate {
  std::vector<double> coeff_error;
};

// Composition of f with phi under the chosen variant, truncated to degree
// n_max. Preconditions:
//  - range: when f has finite radius, |phi| is sampled on 8 spheres
//    (64 points each) spanning phi's domain (capped at the unit ball when
//    phi's nominal domain is unbounded); any sample >= f.radius throws
//    RangeViolation.
//  - Taylor variants additionally need |phi(0)| < f.radius (DomainError)
//    and n_max <= 170 (factorial overflow; InvalidArgument). Coefficients
//    beyond index 20 involve floating-point factorials, exact to ~1 ulp.
// The result carries phi's radius; existence_radius() gives the bound with
// an actual convergence guarantee for the Taylor variants.
Series compose(const Series& f, const Series& phi, CompositionVariant variant,
               std::size_t n_max, VlacciEstimate* estimate = nullptr);

// n-fold odot self-composition of a slice-preserving self-map of the unit
// ball, computed classically on the preserved slice and lifted back; equals
// the n-fold compose(..., odot_right, ...) coefficientwise (tested). n = 0
// gives the identity map. Throws NotSlicePreserving / NotSelfMap.
Series iterate(const Series& f, std::size_t n, std::size_t n_max);

// Largest r (bisection to 1e-6) such that evaluate(abs_series(phi), r) stays
// below f.radius, i.e. the radius on which the Taylor composition is known
// to exist. Returns phi.radius when f is entire or the condition never
// binds, and 0 when it fails already at the constant term.
double existence_radius(const Series& f, const Series& phi);

}  // namespace sliceop
