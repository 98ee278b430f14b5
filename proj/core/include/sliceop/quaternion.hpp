#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "sliceop/config.hpp"
#include "sliceop/errors.hpp"

namespace sliceop {

// Quaternion w + x i + y j + z k over doubles. Multiplication follows the
// Hamilton rules i^2 = j^2 = k^2 = ijk = -1, so ij = k, ji = -k, and the
// product is not commutative; every algorithm in this library is written for
// a fixed operand order.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& r) {
    w += r.w; x += r.x; y += r.y; z += r.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& r) {
    w -= r.w; x -= r.x; y -= r.y; z -= r.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}
inline double abs(const Quaternion& q) { return std::sqrt(norm_sq(q)); }
constexpr double re(const Quaternion& q) { return q.w; }
constexpr Quaternion im(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
  return abs(a - b) <= tol;
}

// Multiplicative inverse conj(q)/|q|^2. Throws ZeroDivision when |q| is below
// cfg::division_epsilon.
inline Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_sq(q);
  if (!(std::sqrt(n2) > cfg::division_epsilon)) {
    throw ZeroDivision("quaternion inverse: operand magnitude below division epsilon");
  }
  return conj(q) / n2;
}

inline Quaternion operator/(const Quaternion& a, const Quaternion& b) {
  return a * inverse(b);
}

// q^n by repeated left-to-right multiplication (powers of one quaternion
// commute, so the order is immaterial here; kept explicit for clarity).
inline Quaternion pow(Quaternion q, int n) {
  Quaternion acc{1.0};
  for (int t = 0; t < n; ++t) acc = acc * q;
  return acc;
}

// A purely imaginary quaternion of unit length; the "I" of a slice C_I.
// Construction validates Re(u) = 0 and |u| = 1 within cfg::unit_tol.
struct ImaginaryUnit {
  Quaternion u;

  explicit ImaginaryUnit(const Quaternion& q) : u(q) {
    if (std::fabs(q.w) > cfg::unit_tol || std::fabs(abs(q) - 1.0) > cfg::unit_tol) {
      throw InvalidArgument("ImaginaryUnit: argument is not a unit imaginary quaternion");
    }
    u.w = 0.0;
  }

  // Normalizes the imaginary part of q into a unit; rejects near-zero input.
  static ImaginaryUnit direction_of(const Quaternion& q) {
    const Quaternion v = im(q);
    const double n = abs(v);
    if (n <= cfg::unit_tol) {
      throw InvalidArgument("ImaginaryUnit: no usable imaginary direction");
    }
    return ImaginaryUnit(v / n);
  }
};

inline bool operator==(const ImaginaryUnit& a, const ImaginaryUnit& b) { return a.u == b.u; }

// Slice coordinates of a quaternion: q = x + y * I with y >= 0. For real q
// (y = 0) every I works, which is recorded as an empty direction.
struct SliceCoords {
  double x = 0.0;
  double y = 0.0;
  std::optional<ImaginaryUnit> direction;
};

// Splits q into slice coordinates. The direction is left empty exactly when
// the imaginary part vanishes within cfg::unit_tol.
SliceCoords decompose(const Quaternion& q);

// Inverse of decompose; an empty direction means "any slice", realized as i.
Quaternion recompose(const SliceCoords& c);

// n quasi-uniform directions on the sphere of unit imaginary quaternions.
// The first four entries are pinned to i, j, k, (i+j+k)/sqrt(3) whenever
// n >= 4 (the leading min(n,4) of that list otherwise); the remainder are
// seeded Gaussian draws normalized to unit length. Throws InvalidArgument
// for n = 0.
std::vector<ImaginaryUnit> sample_sphere(std::size_t n, std::uint64_t seed = cfg::default_seed);

}  // namespace sliceop
