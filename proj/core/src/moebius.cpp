#include "sliceop/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace sliceop {

namespace {

using Cx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// psi(z) = (a z + b)/(c z + 1), the normalization valid for every
// fractional linear self-map of the ball (the pole -1/c lies outside, so
// the d-coefficient cannot vanish).
struct FittedMap {
  Cx a, b, c;

  Cx eval(const Cx& z) const { return (a * z + b) / (c * z + 1.0); }
  Cx deriv(const Cx& z) const {
    const Cx den = c * z + 1.0;
    return (a - b * c) / (den * den);
  }
};

// Solves the 3x3 complex system m x = rhs in place; false when singular.
bool solve3(Cx m[3][3], Cx rhs[3], Cx x[3]) {
  int order[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int best = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[order[r]][col]) > std::abs(m[order[best]][col])) best = r;
    }
    std::swap(order[col], order[best]);
    const Cx pivot = m[order[col]][col];
    if (std::abs(pivot) < 1e-14) return false;
    for (int r = col + 1; r < 3; ++r) {
      const Cx factor = m[order[r]][col] / pivot;
      for (int cc = col; cc < 3; ++cc) m[order[r]][cc] -= factor * m[order[col]][cc];
      rhs[order[r]] -= factor * rhs[order[col]];
    }
  }
  for (int col = 2; col >= 0; --col) {
    Cx acc = rhs[order[col]];
    for (int cc = col + 1; cc < 3; ++cc) acc -= m[order[col]][cc] * x[cc];
    x[col] = acc / m[order[col]][col];
  }
  return true;
}

Quaternion embed(const Cx& z, const ImaginaryUnit& I) {
  return Quaternion{z.real()} + z.imag() * I.u;
}

// Two imaginary units orthogonal to I, for probing transverse slices.
std::pair<ImaginaryUnit, ImaginaryUnit> transverse_pair(const ImaginaryUnit& I) {
  const Quaternion probe =
      std::fabs(I.u.x) < 0.9 ? Quaternion{0, 1, 0, 0} : Quaternion{0, 0, 1, 0};
  const double d = probe.x * I.u.x + probe.y * I.u.y + probe.z * I.u.z;
  const ImaginaryUnit J = ImaginaryUnit::direction_of(probe - d * I.u);
  return {J, ImaginaryUnit(I.u * J.u)};  // I J is the completing unit
}

}  // namespace

Series mobius_series(const Quaternion& a, std::size_t n_max) {
  if (!(abs(a) < 1.0)) throw DomainError("mobius_series: requires |a| < 1");
  std::vector<Quaternion> c(n_max + 1);
  c[0] = a;
  const double drop = 1.0 - norm_sq(a);
  Quaternion pw{1.0};
  for (std::size_t n = 1; n <= n_max; ++n) {
    c[n] = (-drop) * pw;
    pw = pw * conj(a);
  }
  return Series(std::move(c), 1.0);
}

Series automorphism(const MoebiusParams& params, std::size_t n_max) {
  if (!(abs(params.a) < 1.0 - 1e-12)) {
    throw DomainError("automorphism: requires |a| < 1 - 1e-12");
  }
  if (std::fabs(abs(params.u) - 1.0) > 1e-12) {
    throw InvalidArgument("automorphism: u must be a unit quaternion");
  }
  return right_mul(mobius_series(params.a, n_max), params.u);
}

Series slice_automorphism(std::complex<double> a, double theta, const ImaginaryUnit& I,
                          std::size_t n_max) {
  if (!(std::abs(a) < 1.0)) throw DomainError("slice_automorphism: requires |a| < 1");
  const Cx rot{std::cos(theta), std::sin(theta)};
  std::vector<Quaternion> c(n_max + 1);
  c[0] = embed(-a * rot, I);
  const Cx scale = rot * (1.0 - std::norm(a));
  Cx pw{1.0};
  for (std::size_t n = 1; n <= n_max; ++n) {
    c[n] = embed(scale * pw, I);
    pw *= std::conj(a);
  }
  return Series(std::move(c), 1.0);
}

const char* to_string(MapClass type) {
  switch (type) {
    case MapClass::identity: return "identity";
    case MapClass::elliptic: return "elliptic";
    case MapClass::parabolic: return "parabolic";
    case MapClass::hyperbolic: return "hyperbolic";
    case MapClass::spherical_hyperbolic: return "spherical_hyperbolic";
  }
  return "unknown";
}

const char* to_string(FixedPointLocation location) {
  switch (location) {
    case FixedPointLocation::interior: return "interior";
    case FixedPointLocation::boundary: return "boundary";
    case FixedPointLocation::boundary_sphere: return "boundary_sphere";
  }
  return "unknown";
}

Classification classify(const Series& f) {
  const auto slice = common_slice(f);
  if (!slice) throw NotSlicePreserving("classify: coefficients span more than one slice");
  if (f.radius() < 1.0 - 1e-12) {
    throw UnsupportedMap("classify: map is not defined on the whole unit ball");
  }
  const ComplexSeries F = slice_restrict(f, *slice);

  // Three-point fit of psi(z) = (a z + b)/(c z + 1):
  // a z_t + b - w_t c z_t = w_t.
  const Cx pts[3] = {{0.35, 0.10}, {-0.40, 0.22}, {0.15, -0.45}};
  Cx m[3][3], rhs[3], sol[3];
  for (int t = 0; t < 3; ++t) {
    const Cx w = F.evaluate(pts[t]);
    m[t][0] = pts[t];
    m[t][1] = 1.0;
    m[t][2] = -w * pts[t];
    rhs[t] = w;
  }
  if (!solve3(m, rhs, sol)) {
    throw UnsupportedMap("classify: degenerate fractional linear fit");
  }
  const FittedMap psi{sol[0], sol[1], sol[2]};

  // The fit must reproduce f on a ring of fresh points (Moebius-type check)
  for (int t = 0; t < 24; ++t) {
    const double r = t < 12 ? 0.55 : 0.70;
    const double ang = 2.0 * kPi * static_cast<double>(t % 12) / 12.0 + 0.26;
    const Cx z = std::polar(r, ang);
    if (std::abs(F.evaluate(z) - psi.eval(z)) > 1e-8) {
      throw UnsupportedMap("classify: input is not a Moebius-type truncation (fit residual)");
    }
  }

  Classification out;
  if (std::abs(psi.b) <= 1e-10 && std::abs(psi.c) <= 1e-10 && std::abs(psi.a - 1.0) <= 1e-10) {
    out.type = MapClass::identity;
    out.note = "every point of the ball is fixed";
    return out;
  }

  // Automorphism gate: the fitted map must have unimodular boundary values.
  for (int t = 0; t < 16; ++t) {
    const Cx zeta = std::polar(1.0, 2.0 * kPi * static_cast<double>(t) / 16.0);
    if (std::fabs(std::abs(psi.eval(zeta)) - 1.0) > 1e-6) {
      throw UnsupportedMap("classify: fitted map is not a disc automorphism");
    }
  }

  const auto report = [&](const Cx& z, FixedPointLocation loc) {
    out.fixed_points.push_back({embed(z, *slice), loc, std::abs(psi.deriv(z))});
  };

  const double scale = std::max({std::abs(psi.a), std::abs(psi.b), std::abs(psi.c), 1.0});
  if (std::abs(psi.c) <= 1e-12 * scale) {
    // Linear automorphism: a rotation with its fixed point at b/(1-a).
    const Cx z0 = psi.b / (1.0 - psi.a);
    if (std::abs(z0) >= 1.0 - 1e-8) {
      throw UnsupportedMap("classify: rotation fit places the fixed point at the boundary");
    }
    out.type = MapClass::elliptic;
    report(z0, FixedPointLocation::interior);
    return out;
  }

  // Fixed points solve c z^2 + (1-a) z - b = 0. A double root is detected
  // on the relative discriminant; root distances split by sqrt(noise) and
  // cannot be compared directly.
  const Cx lin = 1.0 - psi.a;
  const Cx disc = lin * lin + 4.0 * psi.c * psi.b;
  const double disc_scale = std::max(std::norm(lin), 4.0 * std::abs(psi.c * psi.b));
  if (std::abs(disc) <= 1e-9 * std::max(disc_scale, 1e-30)) {
    const Cx z0 = -lin / (2.0 * psi.c);
    if (std::fabs(std::abs(z0) - 1.0) > 1e-6) {
      throw UnsupportedMap("classify: double fixed point is not on the boundary");
    }
    out.type = MapClass::parabolic;
    report(z0, FixedPointLocation::boundary);
    return out;
  }

  // Distinct roots, the numerically larger one first; the mate comes from
  // the product -b/c to avoid cancellation.
  const Cx sq = std::sqrt(disc);
  const Cx num = std::abs(-lin + sq) >= std::abs(-lin - sq) ? -lin + sq : -lin - sq;
  const Cx z1 = num / (2.0 * psi.c);
  const Cx z2 = (-psi.b / psi.c) / z1;

  const auto interior = [](const Cx& z) { return std::abs(z) < 1.0 - 1e-8; };
  const auto boundary = [](const Cx& z) { return std::fabs(std::abs(z) - 1.0) <= 1e-8; };

  if (interior(z1) || interior(z2)) {
    const Cx zin = interior(z1) ? z1 : z2;
    if (interior(z1) && interior(z2)) {
      throw UnsupportedMap("classify: two interior fixed points are inconsistent");
    }
    out.type = MapClass::elliptic;
    report(zin, FixedPointLocation::interior);
    return out;
  }
  if (!boundary(z1) || !boundary(z2)) {
    throw UnsupportedMap("classify: fixed points stray from the closed ball");
  }

  if (std::abs(z2 - std::conj(z1)) <= 1e-8 && std::fabs(z1.imag()) > 1e-8) {
    // Conjugate pair: f fixes both x+yI and x-yI, hence (representation
    // formula) the whole sphere x + y*S. Confirm by evaluation just inside
    // the sphere in two transverse slices.
    const double x = z1.real();
    const double y = std::fabs(z1.imag());
    const double max_mult =
        std::max(std::abs(psi.deriv(z1)), std::abs(psi.deriv(z2)));
    const auto [J, K] = transverse_pair(*slice);
    const double delta = 1e-4;
    const double tol_eval = 3.0 * delta * (1.0 + max_mult) + 1e-8;
    bool persists = true;
    for (const ImaginaryUnit& dir : {J, K}) {
      const Quaternion p = Quaternion{x} + y * dir.u;
      const Quaternion probe = (1.0 - delta) * p;
      if (abs(f.evaluate(probe) - p) > tol_eval) persists = false;
    }
    if (persists) {
      out.type = MapClass::spherical_hyperbolic;
      out.note = "sphere of fixed points confirmed by sampled evaluation in two "
                 "transverse slices (heuristic)";
      report(z1, FixedPointLocation::boundary_sphere);
      report(z2, FixedPointLocation::boundary_sphere);
      return out;
    }
    out.note = "conjugate boundary pair failed the sphere persistence probe";
  }

  out.type = MapClass::hyperbolic;
  report(z1, FixedPointLocation::boundary);
  report(z2, FixedPointLocation::boundary);
  return out;
}

DenjoyWolffResult denjoy_wolff(const Series& f, double tol, std::size_t n_max) {
  if (!(tol > 0.0)) throw InvalidArgument("denjoy_wolff: requires tol > 0");
  const Classification cls = classify(f);
  if (cls.type == MapClass::identity || cls.type == MapClass::elliptic) {
    throw PreconditionViolated("denjoy_wolff: map must not be elliptic or the identity");
  }
  const FixedPoint* attractor = &cls.fixed_points.front();
  for (const FixedPoint& fp : cls.fixed_points) {
    if (fp.multiplier < attractor->multiplier) attractor = &fp;
  }

  const auto slice = common_slice(f);  // classify guarantees a value
  const ComplexSeries F = slice_restrict(f, *slice);
  const double clamp_at = std::min(F.radius, 1.0) * (1.0 - 1e-12);

  // 32 points in each of four slices of {|q| <= 0.5}; each point is tracked
  // through its two slice projections x +- yI and reassembled by the
  // representation formula, which equals iterating the extended map.
  const ImaginaryUnit dirs[4] = {
      ImaginaryUnit(Quaternion::i()), ImaginaryUnit(Quaternion::j()),
      ImaginaryUnit(Quaternion::k()),
      ImaginaryUnit((Quaternion::i() + Quaternion::j() + Quaternion::k()) /
                    std::sqrt(3.0))};
  struct Orbit {
    Cx zp, zm;
    const ImaginaryUnit* dir;
  };
  std::vector<Orbit> grid;
  grid.reserve(128);
  for (const ImaginaryUnit& dir : dirs) {
    for (int rt = 1; rt <= 4; ++rt) {
      const double r = 0.125 * static_cast<double>(rt);
      for (int at = 0; at < 8; ++at) {
        const double ang = 2.0 * kPi * static_cast<double>(at) / 8.0;
        const Cx z{r * std::cos(ang), r * std::sin(ang)};
        grid.push_back({z, std::conj(z), &dir});
      }
    }
  }

  DenjoyWolffResult out;
  out.limit = attractor->point;
  const auto step = [&](Cx z) {
    z = F.evaluate(z);
    const double az = std::abs(z);
    if (az >= clamp_at) z *= clamp_at / az;  // convergence presses into the boundary
    return z;
  };
  for (std::size_t n = 1; n <= n_max; ++n) {
    double sup = 0.0;
    for (Orbit& o : grid) {
      o.zp = step(o.zp);
      o.zm = step(o.zm);
      const Quaternion value = representation_value(embed(o.zp, *slice), embed(o.zm, *slice),
                                                    *slice, *o.dir);
      sup = std::max(sup, abs(value - out.limit));
    }
    out.trace.push_back(sup);
    if (sup < tol) return out;
  }
  throw NoConvergence("denjoy_wolff: sup distance did not reach tol within n_max iterations");
}

}  // namespace sliceop
