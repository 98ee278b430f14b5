#include "sliceop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>

#include "sliceop/compose.hpp"
#include "sliceop/config.hpp"
#include "sliceop/errors.hpp"
#include "sliceop/hardy.hpp"
#include "sliceop/moebius.hpp"
#include "sliceop/rng.hpp"
#include "sliceop/series.hpp"

namespace sliceop {

namespace {

constexpr double kBad = std::numeric_limits<double>::infinity();

const Quaternion kOne{1.0, 0.0, 0.0, 0.0};
const Quaternion kQI{0.0, 1.0, 0.0, 0.0};
const Quaternion kQJ{0.0, 0.0, 1.0, 0.0};
const Quaternion kQK{0.0, 0.0, 0.0, 1.0};

using V = CompositionVariant;

Quaternion embed_i(const std::complex<double>& z) {
  return {z.real(), z.imag(), 0.0, 0.0};
}

Quaternion random_quat(Rng& rng) {
  return {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
}

// Random polynomial (entire) series; decay < 1 tames coefficient growth in
// compositions so identities stay well conditioned.
Series random_series(Rng& rng, std::size_t max_deg, double decay = 1.0) {
  const std::size_t deg =
      1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(max_deg));
  std::vector<Quaternion> c(std::min(deg, max_deg) + 1);
  double scale = 1.0;
  for (auto& a : c) {
    a = scale * random_quat(rng);
    scale *= decay;
  }
  return Series(std::move(c));
}

Series random_real_series(Rng& rng, std::size_t max_deg, double decay = 1.0) {
  const std::size_t deg =
      1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(max_deg));
  std::vector<Quaternion> c(std::min(deg, max_deg) + 1);
  double scale = 1.0;
  for (auto& a : c) {
    a = Quaternion{scale * rng.normal()};
    scale *= decay;
  }
  return Series(std::move(c));
}

// Random point of modulus r.
Quaternion random_point(Rng& rng, double r) {
  Quaternion u{0.0, rng.normal(), rng.normal(), rng.normal()};
  const double n = abs(u);
  const double theta = rng.uniform(0.0, 6.283185307179586);
  if (n < 1e-12) return Quaternion{r * std::cos(theta)};
  u = u / n;
  return r * (Quaternion{std::cos(theta)} + std::sin(theta) * u);
}

const QuadratureConfig kLightQuad{128, {0.5, 0.9, 0.99}, 16, cfg::default_seed};

// phi(0) = 0 self-map with sampled sup norm exactly target on the light grid
// (the same grid littlewood_check uses internally).
Series random_self_map(Rng& rng, std::size_t max_deg, double target) {
  Series phi = random_series(rng, max_deg);
  phi.set_coeff(0, Quaternion{});
  const double sup = sup_norm_estimate(phi, kLightQuad);
  if (sup < 1e-9) return phi;
  return left_mul(Quaternion{target / sup}, phi);
}

void run_case(std::vector<VerifyCase>& out, std::string name, std::string anchor,
              double tol, const std::function<double()>& body) {
  VerifyCase c;
  c.name = std::move(name);
  c.paper_anchor = std::move(anchor);
  try {
    c.max_error = body();
    c.status = c.max_error <= tol ? CaseStatus::pass : CaseStatus::fail;
  } catch (const std::exception&) {
    c.max_error = kBad;
    c.status = CaseStatus::fail;
  }
  out.push_back(std::move(c));
}

// ---------------------------------------------------------------------------
// examples: worked example values and closed-form identities
// ---------------------------------------------------------------------------

void suite_examples(std::vector<VerifyCase>& out, std::uint64_t seed) {
  const Series f_q2 = Series::monomial(2, kOne);
  const Series phi_mixed({Quaternion{}, kQJ, kQI});  // q^2 i + q j
  const ImaginaryUnit unit_i(kQI);
  const ImaginaryUnit unit_j(kQJ);

  run_case(out, "examples/odot-worked",
           "odot composition of f=q^2 with phi=q^2 i + q j", 1e-12, [&] {
             const Series target({{}, {}, {-1.0}, {}, {-1.0}});
             double e = coeff_distance(compose(f_q2, phi_mixed, V::odot_right, 8), target);
             return std::max(e, coeff_distance(compose(f_q2, phi_mixed, V::odot_left, 8), target));
           });

  run_case(out, "examples/vlacci-worked",
           "Taylor composition of f=q^2 with phi=q^2 i + q j", 1e-12, [&] {
             const Series target({{}, {}, {-1.0}, {0.0, 0.0, 0.0, -2.0 / 3.0}, {-1.0}});
             double e = coeff_distance(compose(f_q2, phi_mixed, V::vlacci_right, 8), target);
             return std::max(e,
                             coeff_distance(compose(f_q2, phi_mixed, V::vlacci_left, 8), target));
           });

  {
    // The published worked example for f=q, phi=q^2 i reports q^2 i j (and
    // its negative for the left variant); the defining coefficient formula
    // gives back phi itself. The formula result is asserted; the distance to
    // the published value is recorded as a flagged discrepancy.
    VerifyCase c;
    c.name = "examples/vlacci-linear-outer-claim";
    c.paper_anchor = "published worked example f=q, phi=q^2 i under Taylor composition";
    try {
      const Series phi = Series::monomial(2, kQI);
      const Series got_r = compose(Series::identity(), phi, V::vlacci_right, 6);
      const Series got_l = compose(Series::identity(), phi, V::vlacci_left, 6);
      const double formula_dev =
          std::max(coeff_distance(got_r, phi), coeff_distance(got_l, phi));
      if (formula_dev > 1e-12) {
        c.status = CaseStatus::fail;
        c.max_error = formula_dev;
      } else {
        const Series claim_r = Series::monomial(2, kQI * kQJ);
        const Series claim_l = Series::monomial(2, -(kQI * kQJ));
        c.status = CaseStatus::flagged_discrepancy;
        c.max_error =
            std::max(coeff_distance(got_r, claim_r), coeff_distance(got_l, claim_l));
      }
    } catch (const std::exception&) {
      c.status = CaseStatus::fail;
      c.max_error = kBad;
    }
    out.push_back(std::move(c));
  }

  run_case(out, "examples/odot-non-associative",
           "two bracketings of q^2, 1+q i, q j differ by exactly 2q^2", 1e-12, [&] {
             const Series g({kOne, kQI});
             const Series phi({Quaternion{}, kQJ});
             double e = 0.0;
             {
               const Series lhs = compose(compose(f_q2, g, V::odot_right, 8), phi, V::odot_right, 8);
               const Series rhs = compose(f_q2, compose(g, phi, V::odot_right, 8), V::odot_right, 8);
               e = std::max(e, coeff_distance(lhs, Series({kOne, 2.0 * (kQJ * kQI), kOne})));
               e = std::max(e, coeff_distance(rhs, Series({kOne, 2.0 * (kQJ * kQI), -kOne})));
               e = std::max(e, coeff_distance(lhs - rhs, Series::monomial(2, 2.0 * kOne)));
             }
             {
               const Series lhs = compose(compose(f_q2, g, V::odot_left, 8), phi, V::odot_left, 8);
               const Series rhs = compose(f_q2, compose(g, phi, V::odot_left, 8), V::odot_left, 8);
               e = std::max(e, coeff_distance(lhs, Series({kOne, 2.0 * (kQI * kQJ), kOne})));
               e = std::max(e, coeff_distance(rhs, Series({kOne, 2.0 * (kQI * kQJ), -kOne})));
             }
             return e;
           });

  run_case(out, "examples/star-compose-mixed",
           "odot composition is not a star-product homomorphism", 1e-12, [&] {
             const Series f = Series::monomial(2, kQI);
             const Series g({kOne, kQJ});
             const Series phi = Series::monomial(1, kQK);  // q (i j)
             const Series lhs = compose(star(f, g), phi, V::odot_right, 8);
             const Series rhs =
                 star(compose(f, phi, V::odot_right, 8), compose(g, phi, V::odot_right, 8));
             double e = coeff_distance(lhs, Series({{}, {}, -kQI, kOne}));
             return std::max(e, coeff_distance(rhs, Series({{}, {}, -kQI, -kOne})));
           });

  run_case(out, "examples/odot-left-affine",
           "left odot composition with the affine map q + i", 1e-12, [&] {
             const Series f = Series::monomial(2, kQI);
             const Series g({kOne, kQJ});
             const Series psi({kQI, kOne});  // q + i
             const Series lhs = compose(star(f, g), psi, V::odot_left, 8);
             const Series t1({Quaternion{0, -1, -1, 0}, Quaternion{-2, 0, 0, -3},
                              Quaternion{0, 1, 3, 0}, Quaternion{0, 0, 0, 1}});
             double e = coeff_distance(lhs, t1);
             const Series rhs =
                 star(compose(f, psi, V::odot_left, 8), compose(g, psi, V::odot_left, 8));
             const Series t2({Quaternion{0, -1, -1, 0}, Quaternion{-2, 0, 0, 1},
                              Quaternion{0, 1, -1, 0}, Quaternion{0, 0, 0, 1}});
             return std::max(e, coeff_distance(rhs, t2));
           });

  run_case(out, "examples/star-power", "star powers of q j + q^2 i", 1e-12, [&] {
    const Series phi({Quaternion{}, kQJ, kQI});
    const Series p2 = star_power(phi, 2, 8);
    double e = coeff_distance(p2, Series({{}, {}, {-1.0}, {}, {-1.0}}));
    return std::max(e, coeff_distance(star_power(phi, 3, 12), star(p2, phi)));
  });

  run_case(out, "examples/bell-rows",
           "noncommutative partial Bell polynomials, explicit low rows", 1e-12, [&] {
             const std::vector<Quaternion> args = {kQJ, 2.0 * kQI, Quaternion{}, Quaternion{}};
             const BellTable t = bell_table(args);
             double e = abs(t.row(1) - kQJ);
             e = std::max(e, abs(t.part(2, 1) - args[1]));
             e = std::max(e, abs(t.part(2, 2) - kQJ * kQJ));
             // B_{3,2} = q2 q1 + 2 q1 q2 -> -2 i j for q1=j, q2=2i
             e = std::max(e, abs(t.part(3, 2) - Quaternion{0, 0, 0, -2}));
             // B_{4,2}(j, 2i, 0, 0) = 3 q2 q2 = -12
             e = std::max(e, abs(t.part(4, 2) - Quaternion{-12.0}));
             // rows are the sums of their homogeneous parts
             for (std::size_t n = 1; n <= 4; ++n) {
               Quaternion sum{};
               for (std::size_t d = 1; d <= n; ++d) sum += t.part(n, d);
               e = std::max(e, abs(t.row(n) - sum));
             }
             // polynomial-cost recursion agrees with the chain enumeration
             const auto parts = bell_parts(args, 4);
             e = std::max(e, abs(parts[3][2] - t.part(3, 2)));
             e = std::max(e, abs(parts[4][2] - t.part(4, 2)));
             // real arguments collapse to the classical Bell value
             const BellTable tr = bell_table({Quaternion{1.5}, Quaternion{-0.25}, Quaternion{2.0}});
             e = std::max(e, abs(tr.row(3) - Quaternion{4.25}));
             return e;
           });

  run_case(out, "examples/mobius-taylor",
           "Taylor coefficients of the Moebius factor at a=1/2 and a=0", 1e-12, [&] {
             const Series m = mobius_series(Quaternion{0.5}, 8);
             double e = abs(m.coeff(0) - Quaternion{0.5});
             double pw = 1.0;
             for (std::size_t n = 1; n <= 8; ++n) {
               e = std::max(e, abs(m.coeff(n) - Quaternion{-0.75 * pw}));
               pw *= 0.5;
             }
             e = std::max(e, coeff_distance(mobius_series(Quaternion{}, 8),
                                            Series({Quaternion{}, -kOne})));
             return e;
           });

  run_case(out, "examples/mobius-involution",
           "the Moebius factor composes with itself to the identity", 1e-8, [&] {
             const Series m = mobius_series(Quaternion{0.5}, 160);
             return coeff_distance(compose(m, m, V::odot_right, 160), Series::identity(1.0));
           });

  run_case(out, "examples/mobius-root",
           "phi_a takes 0 to a and a to 0 on the slice of a", 1e-10, [&] {
             const Quaternion a{0.2, 0.3, 0.0, 0.0};
             const Series m = mobius_series(a, 128);
             double e = abs(m.coeff(0) - a);
             return std::max(e, abs(m.evaluate(a)));
           });

  run_case(out, "examples/slice-automorphism-taylor",
           "disk automorphism Taylor data on a named slice", 1e-12, [&] {
             const Series s = slice_automorphism({-0.5, 0.0}, 0.0, unit_i, 8);
             double e = abs(s.coeff(0) - Quaternion{0.5});
             double pw = 1.0;
             for (std::size_t n = 1; n <= 8; ++n) {
               e = std::max(e, abs(s.coeff(n) - Quaternion{0.75 * pw}));
               pw *= -0.5;
             }
             e = std::max(e, coeff_distance(slice_automorphism({0.0, 0.0}, 3.14159265358979323846,
                                                               unit_i, 4),
                                            Series({Quaternion{}, -kOne})));
             return e;
           });

  run_case(out, "examples/classify-elliptic",
           "the Moebius factor has one interior fixed point", 1e-9, [&] {
             const Classification c = classify(mobius_series(Quaternion{0.5}, 128));
             if (c.type != MapClass::elliptic || c.fixed_points.size() != 1) return kBad;
             const FixedPoint& fp = c.fixed_points[0];
             if (fp.location != FixedPointLocation::interior) return kBad;
             double e = abs(fp.point - Quaternion{2.0 - std::sqrt(3.0)});
             return std::max(e, std::fabs(fp.multiplier - 1.0));
           });

  run_case(out, "examples/classify-hyperbolic",
           "boundary fixed points and multipliers of (q+1/2)(1+q/2)^{-1}", 1e-8, [&] {
             const Series h = slice_automorphism({-0.5, 0.0}, 0.0, unit_i, 128);
             const Classification c = classify(h);
             if (c.type != MapClass::hyperbolic || c.fixed_points.size() != 2) return kBad;
             double e = 0.0;
             bool saw_plus = false, saw_minus = false;
             for (const FixedPoint& fp : c.fixed_points) {
               if (fp.location != FixedPointLocation::boundary) return kBad;
               if (abs(fp.point - kOne) < 0.5) {
                 saw_plus = true;
                 e = std::max(e, abs(fp.point - kOne));
                 e = std::max(e, std::fabs(fp.multiplier - 1.0 / 3.0));
               } else {
                 saw_minus = true;
                 e = std::max(e, abs(fp.point + kOne));
                 e = std::max(e, std::fabs(fp.multiplier - 3.0));
               }
             }
             return saw_plus && saw_minus ? e : kBad;
           });

  run_case(out, "examples/classify-parabolic",
           "a boundary double fixed point is detected as parabolic", 1e-8, [&] {
             // ((2-i)z + i) / (-i z + (2+i)), normalized so the constant
             // denominator coefficient is 1; double fixed point at 1.
             const std::complex<double> a(0.6, -0.8), b(0.2, 0.4), cc(-0.2, -0.4);
             std::vector<Quaternion> co(65);
             co[0] = embed_i(b);
             std::complex<double> pw = 1.0;
             const std::complex<double> lead = a - b * cc;
             for (std::size_t n = 1; n < co.size(); ++n) {
               co[n] = embed_i(lead * pw);
               pw *= -cc;
             }
             const Series f(std::move(co), 1.0 / std::abs(cc));
             const Classification c = classify(f);
             if (c.type != MapClass::parabolic || c.fixed_points.size() != 1) return kBad;
             const FixedPoint& fp = c.fixed_points[0];
             if (fp.location != FixedPointLocation::boundary) return kBad;
             double e = abs(fp.point - kOne);
             return std::max(e, std::fabs(fp.multiplier - 1.0));
           });

  run_case(out, "examples/classify-spherical",
           "conjugate boundary fixed points carry a fixed sphere", 1e-8, [&] {
             const Series s = slice_automorphism({0.0, -0.4}, 0.0, unit_i, 128);
             const Classification c = classify(s);
             if (c.type != MapClass::spherical_hyperbolic || c.fixed_points.size() != 2)
               return kBad;
             double e = 0.0;
             bool saw_plus = false, saw_minus = false;
             for (const FixedPoint& fp : c.fixed_points) {
               if (fp.location != FixedPointLocation::boundary_sphere) return kBad;
               if (abs(fp.point - kQI) < 0.5) {
                 saw_plus = true;
                 e = std::max(e, abs(fp.point - kQI));
                 e = std::max(e, std::fabs(fp.multiplier - 3.0 / 7.0));
               } else {
                 saw_minus = true;
                 e = std::max(e, abs(fp.point + kQI));
                 e = std::max(e, std::fabs(fp.multiplier - 7.0 / 3.0));
               }
             }
             return saw_plus && saw_minus ? e : kBad;
           });

  run_case(out, "examples/denjoy-wolff-hyperbolic",
           "orbits reach the attracting boundary point geometrically", 1e-8, [&] {
             const Series h = slice_automorphism({-0.5, 0.0}, 0.0, unit_i, 128);
             const DenjoyWolffResult r = denjoy_wolff(h, 1e-6, 200);
             double e = abs(r.limit - kOne);
             if (r.trace.empty() || r.trace.size() > 40) return kBad;
             for (std::size_t n = 5; n < r.trace.size(); ++n) {
               if (r.trace[n] > r.trace[n - 1] + 1e-12) return kBad;
             }
             return e;
           });

  run_case(out, "examples/denjoy-wolff-parabolic",
           "orbits reach a parabolic boundary fixed point at rate ~ 1/n", 1e-8, [&] {
             const std::complex<double> a(0.6, -0.8), b(0.2, 0.4), cc(-0.2, -0.4);
             std::vector<Quaternion> co(65);
             co[0] = embed_i(b);
             std::complex<double> pw = 1.0;
             const std::complex<double> lead = a - b * cc;
             for (std::size_t n = 1; n < co.size(); ++n) {
               co[n] = embed_i(lead * pw);
               pw *= -cc;
             }
             const Series f(std::move(co), 1.0 / std::abs(cc));
             const DenjoyWolffResult r = denjoy_wolff(f, 1e-3, 20000);
             if (r.trace.size() < 10) return kBad;
             return abs(r.limit - kOne);
           });

  run_case(out, "examples/denjoy-wolff-guards",
           "identity and elliptic maps are rejected up front", 0.0, [&] {
             bool ok_identity = false, ok_elliptic = false;
             try {
               denjoy_wolff(Series::identity(1.0), 1e-6, 100);
             } catch (const PreconditionViolated&) {
               ok_identity = true;
             }
             try {
               denjoy_wolff(mobius_series(Quaternion{0.5}, 128), 1e-6, 100);
             } catch (const PreconditionViolated&) {
               ok_elliptic = true;
             }
             return ok_identity && ok_elliptic ? 0.0 : kBad;
           });

  run_case(out, "examples/iterate-evaluate",
           "iterates of a hyperbolic automorphism evaluated at the origin", 1e-9, [&] {
             const Series h = slice_automorphism({-0.5, 0.0}, 0.0, unit_i, 64);
             double e = abs(iterate(h, 2, 64).evaluate(Quaternion{}) - Quaternion{0.8});
             e = std::max(e, coeff_distance(iterate(h, 1, 64), h));
             return std::max(e, coeff_distance(iterate(h, 0, 64), Series::identity(1.0)));
           });

  run_case(out, "examples/existence-radius",
           "convergence radius of Taylor composition with a Moebius inner map", 2e-6, [&] {
             const Series f = mobius_series(Quaternion{0.3}, 64);
             const Series phi = mobius_series(Quaternion{0.5}, 256);
             return std::fabs(existence_radius(f, phi) - 0.5);
           });

  run_case(out, "examples/existence-radius-tight",
           "one-third lower bound, tight along the Moebius family", 2e-6, [&] {
             const Series f = mobius_series(Quaternion{0.3}, 64);
             double e = 0.0;
             for (double a : {0.5, 0.9, 0.99}) {
               const Series phi = mobius_series(Quaternion{a}, 400);
               const double r = existence_radius(f, phi);
               if (r < 1.0 / 3.0 - 1e-6) return kBad;
               e = std::max(e, std::fabs(r - 1.0 / (1.0 + 2.0 * a)));
             }
             const Series entire({kOne, kQI, kQJ});
             if (existence_radius(entire, mobius_series(Quaternion{0.5}, 64)) != 1.0) return kBad;
             if (!std::isinf(existence_radius(entire, Series({Quaternion{}, Quaternion{0.25}}))))
               return kBad;
             return e;
           });

  run_case(out, "examples/series-evaluate",
           "left-power Horner evaluation values", 1e-9, [&] {
             double e = abs(Series::monomial(2, kOne).evaluate(kQJ) + kOne);
             e = std::max(e, abs(Series({kOne, kQI}).evaluate(kQJ) - (kOne + kQJ * kQI)));
             std::vector<Quaternion> geo(61);
             double pw = 1.0;
             for (auto& g : geo) {
               g = Quaternion{pw};
               pw *= 0.5;
             }
             const Series gs(std::move(geo), 2.0);
             return std::max(e, abs(gs.evaluate(Quaternion{0.5}) - Quaternion{4.0 / 3.0}));
           });

  run_case(out, "examples/star-products",
           "convolution products of short series", 1e-12, [&] {
             double e = coeff_distance(star(Series::monomial(1, kQI), Series::monomial(1, kQJ)),
                                       Series::monomial(2, kQK));
             e = std::max(e, coeff_distance(star(Series::monomial(2, kQI), Series({kOne, kQJ})),
                                            Series({{}, {}, kQI, kQK})));
             e = std::max(e, coeff_distance(star(Series({kOne, kOne}), Series({kOne, -kOne})),
                                            Series({kOne, {}, -kOne})));
             return e;
           });

  run_case(out, "examples/conjugate-symmetrize",
           "regular conjugate and symmetrization closed forms", 1e-12, [&] {
             const Series f({kOne, kQI});
             double e = coeff_distance(regular_conjugate(f), Series({kOne, -kQI}));
             e = std::max(e, coeff_distance(symmetrize(f), Series({kOne, {}, kOne})));
             const Series g({-kQI, kOne});  // q - i
             e = std::max(e, coeff_distance(symmetrize(g), Series({kOne, {}, kOne})));
             for (const ImaginaryUnit& u : sample_sphere(8, 42)) {
               e = std::max(e, abs(symmetrize(g).evaluate(u.u)));
             }
             const Quaternion a{0.2, 0.3, 0.0, 0.0};
             e = std::max(e, coeff_distance(regular_conjugate(mobius_series(a, 32)),
                                            mobius_series(conj(a), 32)));
             return e;
           });

  run_case(out, "examples/star-reciprocal",
           "geometric star reciprocal of 1 - q i", 1e-12, [&] {
             const Series f({kOne, -kQI});
             const Series r = star_reciprocal(f, 8);
             std::vector<Quaternion> expect(9);
             Quaternion pw = kOne;
             for (auto& c : expect) {
               c = pw;
               pw = pw * kQI;
             }
             double e = coeff_distance(r, Series(std::move(expect)));
             e = std::max(e, coeff_distance(star_trunc(f, r, 8), Series::constant(kOne)));
             e = std::max(e, coeff_distance(star_trunc(r, f, 8), Series::constant(kOne)));
             e = std::max(e, coeff_distance(star_reciprocal(Series::constant(Quaternion{2.0}), 4),
                                            Series::constant(Quaternion{0.5})));
             return e;
           });

  run_case(out, "examples/shift-structure",
           "coefficient shift and its reassembly", 1e-12, [&] {
             const Series f({kOne, Quaternion{2.0}, Quaternion{3.0}});
             double e = coeff_distance(shift(f), Series({Quaternion{2.0}, Quaternion{3.0}}));
             const Series re =
                 Series::constant(f.coeff(0)) + star(Series::identity(), shift(f));
             e = std::max(e, coeff_distance(re, f));
             Rng rng(seed);
             const Series g = random_series(rng, 10);
             if (h2_norm(shift(g)) > h2_norm(g) + 1e-12) return kBad;
             return e;
           });

  run_case(out, "examples/abs-series",
           "coefficientwise modulus dominates evaluation", 1e-12, [&] {
             const Series f({Quaternion{}, kQI, Quaternion{-0.5}});
             double e = coeff_distance(abs_series(f), Series({{}, kOne, Quaternion{0.5}}));
             Rng rng(seed);
             for (int t = 0; t < 20; ++t) {
               const Series g = random_series(rng, 8);
               const Quaternion q = random_point(rng, 0.7);
               const double dom = abs_series(g).evaluate(Quaternion{0.7}).w;
               e = std::max(e, std::max(0.0, abs(g.evaluate(q)) - dom));
             }
             return e;
           });

  run_case(out, "examples/split-extend",
           "splitting along a slice and reassembly", 1e-12, [&] {
             const SliceSplit s = split(Series({kOne, kQJ}), unit_i, unit_j);
             double e = std::abs(s.F.coeff(0) - std::complex<double>(1.0, 0.0));
             e = std::max(e, std::abs(s.F.coeff(1)));
             e = std::max(e, std::abs(s.G.coeff(0)));
             e = std::max(e, std::abs(s.G.coeff(1) - std::complex<double>(1.0, 0.0)));
             const SliceSplit s2 = split(Series::monomial(1, kQK), unit_i, unit_j);
             e = std::max(e, std::abs(s2.F.coeff(1)));
             e = std::max(e, std::abs(s2.G.coeff(1) - std::complex<double>(0.0, 1.0)));
             Rng rng(seed);
             for (int t = 0; t < 10; ++t) {
               const Series g = random_series(rng, 8);
               const SliceSplit sp = split(g, unit_i);
               e = std::max(e, coeff_distance(extend(sp.F, sp.G, ImaginaryUnit(sp.I),
                                                     ImaginaryUnit(sp.J)),
                                              g));
             }
             return e;
           });

  run_case(out, "examples/representation-values",
           "two slice values determine every other slice value", 1e-13, [&] {
             double e = abs(representation_value(kQI, -kQI, unit_i, unit_j) - kQJ);
             const ImaginaryUnit minus_i(-kQI);
             return std::max(e, abs(representation_value(-kQI, kQI, minus_i, unit_j) - kQJ));
           });

  run_case(out, "examples/hardy-norms",
           "norm identities on the Hardy space of the ball", 1e-10, [&] {
             double e = std::fabs(h2_norm(mobius_series(Quaternion{0.5}, 256)) - 1.0);
             const Quaternion w{0.3, 0.2, 0.0, 0.0};
             const Series kw = kernel_series(w, 256);
             e = std::max(e, std::fabs(h2_norm(kw) - 1.0 / std::sqrt(1.0 - norm_sq(w))));
             const BoundCheck b = growth_bound_check(kw, 2.0, w);
             if (!b.pass) return kBad;
             return std::max(e, std::fabs(b.lhs - b.rhs));
           });

  run_case(out, "examples/multiplier-isometry",
           "star multiplication by a Moebius factor preserves the H2 norm", 0.0, [&] {
             Rng rng(seed);
             double worst = 0.0;
             for (const Quaternion& a : {Quaternion{0.4}, Quaternion{0.3, 0.2, 0.0, 0.0}}) {
               for (int t = 0; t < 10; ++t) {
                 const Series f = random_series(rng, 10);
                 const IsometryCheck c = multiplier_isometry_check(f, a, 256);
                 if (!c.pass) return kBad;
                 const double dev =
                     std::max(std::fabs(c.left - c.base), std::fabs(c.right - c.base));
                 worst = std::max(worst, dev - c.tol);
               }
             }
             return worst;
           });

  run_case(out, "examples/operator-norm-light",
           "composition norm against the closed form at moderate truncation", 0.02, [&] {
             const Series phi = mobius_series(Quaternion{0.5}, 128);
             const double sigma =
                 operator_norm(composition_matrix(phi, 128, OperatorSide::right_linear_C));
             return std::fabs(sigma - std::sqrt(3.0)) / std::sqrt(3.0);
           });

  run_case(out, "examples/norm-lower-bound",
           "kernel lower bound sits just under the closed form", 0.0, [&] {
             double e = 0.0;
             for (double a : {0.3, 0.7}) {
               const Series phi = mobius_series(Quaternion{a}, 512);
               const double lb = norm_lower_bound(phi, 64);
               const double cf = std::sqrt((1.0 + a) / (1.0 - a));
               if (lb > cf * (1.0 + 1e-9)) return kBad;
               e = std::max(e, std::max(0.0, 0.98 * cf - lb));
             }
             return e;
           });

  run_case(out, "examples/hp-growth-cauchy",
           "pointwise growth and coefficient bounds across p", 0.0, [&] {
             Rng rng(seed);
             double worst = 0.0;
             const double inf_p = std::numeric_limits<double>::infinity();
             for (int t = 0; t < 10; ++t) {
               const Series f = random_series(rng, 12);
               for (double p : {1.0, 2.0, 4.0, inf_p}) {
                 const BoundCheck g = growth_bound_check(f, p, random_point(rng, 0.6));
                 if (!g.pass) worst = std::max(worst, g.lhs - g.rhs);
                 const BoundCheck cb = cauchy_coefficient_check(f, p, 3);
                 if (!cb.pass) worst = std::max(worst, cb.lhs - cb.rhs);
               }
             }
             const BoundCheck m =
                 cauchy_coefficient_check(Series::monomial(5, kOne), inf_p, 5);
             if (!m.pass) return kBad;
             return worst;
           });

  run_case(out, "examples/circle-mean-parseval",
           "circle means equal coefficient sums slice by slice", 1e-12, [&] {
             Rng rng(seed);
             const Series f = random_series(rng, 10);
             double target = 0.0;
             for (std::size_t n = 0; n <= f.degree(); ++n) {
               target += norm_sq(f.coeff(n)) * std::pow(0.81, static_cast<double>(n));
             }
             double e = std::fabs(circle_mean_p(f, 0.9, unit_i, 2.0, 1024) - target);
             return std::max(e, std::fabs(circle_mean_p(f, 0.9, unit_j, 2.0, 1024) - target));
           });
}

// ---------------------------------------------------------------------------
// littlewood: subordination norm bounds over seeded random pairs
// ---------------------------------------------------------------------------

void suite_littlewood(std::vector<VerifyCase>& out, std::uint64_t seed) {
  run_case(out, "littlewood/seeded-pairs",
           "subordination: composition with a base-point-fixing self-map contracts H2",
           0.0, [&] {
             Rng rng(seed);
             double worst = 0.0;
             for (int t = 0; t < 1000; ++t) {
               const Series f = random_series(rng, 16);
               const Series phi = random_self_map(rng, 16, 0.9);
               const LittlewoodCheck c = littlewood_check(f, phi, 256);
               worst = std::max(worst, -c.margin);
             }
             return std::max(0.0, worst);
           });

  run_case(out, "littlewood/schwarz",
           "base-point-fixing self-maps shrink moduli", 0.0, [&] {
             Rng rng(seed);
             double worst = 0.0;
             for (int t = 0; t < 200; ++t) {
               const Series phi = random_self_map(rng, 12, 0.9);
               for (int s = 0; s < 20; ++s) {
                 const double r = 0.05 + 0.94 * rng.uniform();
                 const Quaternion q = random_point(rng, r);
                 worst = std::max(worst, abs(phi.evaluate(q)) - r * (1.0 + 1e-12));
               }
             }
             return std::max(0.0, worst);
           });

  run_case(out, "littlewood/preconditions",
           "the subordination check rejects maps that move the base point", 0.0, [&] {
             Rng rng(seed);
             const Series f = random_series(rng, 8);
             bool ok_origin = false, ok_degree = false;
             try {
               littlewood_check(f, Series({Quaternion{0.5}, Quaternion{0.2}}), 64);
             } catch (const PreconditionViolated&) {
               ok_origin = true;
             }
             try {
               littlewood_check(random_series(rng, 40), random_self_map(rng, 4, 0.5), 64);
             } catch (const PreconditionViolated&) {
               ok_degree = true;
             }
             return ok_origin && ok_degree ? 0.0 : kBad;
           });
}

// ---------------------------------------------------------------------------
// conjugation: conjugate dualities and variant collapse
// ---------------------------------------------------------------------------

void suite_conjugation(std::vector<VerifyCase>& out, std::uint64_t seed) {
  run_case(out, "conjugation/compose-duality",
           "the regular conjugate swaps the two odot compositions", 1e-11, [&] {
             Rng rng(seed);
             double e = 0.0;
             for (int t = 0; t < 500; ++t) {
               // Decay 0.5 keeps the star powers of phi O(1); flatter data
               // amplifies roundoff past the coefficientwise tolerance.
               const Series f = random_series(rng, 8, 0.5);
               const Series phi = random_series(rng, 8, 0.5);
               e = std::max(e, coeff_distance(regular_conjugate(compose(f, phi, V::odot_right, 64)),
                                              compose(regular_conjugate(f), regular_conjugate(phi),
                                                      V::odot_left, 64)));
               e = std::max(e, coeff_distance(regular_conjugate(compose(f, phi, V::odot_left, 64)),
                                              compose(regular_conjugate(f), regular_conjugate(phi),
                                                      V::odot_right, 64)));
             }
             return e;
           });

  run_case(out, "conjugation/star-anti-homomorphism",
           "the regular conjugate reverses star products", 1e-11, [&] {
             Rng rng(seed);
             double e = 0.0;
             for (int t = 0; t < 500; ++t) {
               const Series f = random_series(rng, 8);
               const Series g = random_series(rng, 8);
               e = std::max(e, coeff_distance(regular_conjugate(star(f, g)),
                                              star(regular_conjugate(g), regular_conjugate(f))));
             }
             return e;
           });

  run_case(out, "conjugation/symmetrize-central",
           "symmetrization is real and two-sided", 1e-11, [&] {
             Rng rng(seed);
             double e = 0.0;
             for (int t = 0; t < 100; ++t) {
               const Series f = random_series(rng, 8);
               const Series fs = symmetrize(f);
               for (std::size_t n = 0; n <= fs.degree(); ++n) {
                 e = std::max(e, abs(im(fs.coeff(n))));
               }
               e = std::max(e, coeff_distance(star(f, regular_conjugate(f)),
                                              star(regular_conjugate(f), f)));
             }
             return e;
           });

  run_case(out, "conjugation/variant-collapse",
           "all six compositions agree for slice-preserving data", 1e-10, [&] {
             Rng rng(seed);
             double e = 0.0;
             for (int t = 0; t < 50; ++t) {
               const Series f = random_real_series(rng, 5, 0.6);
               const Series phi = random_real_series(rng, 5, 0.6);
               const Series base = compose(f, phi, V::odot_right, 25);
               for (V v : {V::odot_left, V::vlacci_right, V::vlacci_left, V::bullet_up,
                           V::bullet_down}) {
                 e = std::max(e, coeff_distance(compose(f, phi, v, 25), base));
               }
             }
             return e;
           });

  run_case(out, "conjugation/slice-preserving-inner",
           "a slice-preserving inner map makes Taylor and odot composition equal",
           1e-10, [&] {
             Rng rng(seed);
             double e = 0.0;
             for (int t = 0; t < 50; ++t) {
               const Series f = random_series(rng, 6, 0.6);
               const Series phi = random_real_series(rng, 4, 0.6);
               e = std::max(e, coeff_distance(compose(f, phi, V::vlacci_right, 24),
                                              compose(f, phi, V::odot_right, 24)));
               e = std::max(e, coeff_distance(compose(f, phi, V::vlacci_left, 24),
                                              compose(f, phi, V::odot_left, 24)));
             }
             return e;
           });
}

// ---------------------------------------------------------------------------
// star-pointwise: the pointwise product formula and its consequences
// ---------------------------------------------------------------------------

void suite_star_pointwise(std::vector<VerifyCase>& out, std::uint64_t seed) {
  run_case(out, "star-pointwise/product-formula",
           "f*g at q equals f(q) times g at the twisted point", 1e-9, [&] {
             Rng rng(seed);
             double worst = 0.0;
             int done = 0;
             while (done < 200) {
               const Series f = random_series(rng, 10, 0.9);
               const Series g = random_series(rng, 10, 0.9);
               const Quaternion q = random_point(rng, 0.05 + 0.85 * rng.uniform());
               const Quaternion fq = f.evaluate(q);
               if (abs(fq) <= 1e-6) continue;
               ++done;
               const Quaternion twisted = inverse(fq) * q * fq;
               const Quaternion lhs = star(f, g).evaluate(q);
               const Quaternion rhs = fq * g.evaluate(twisted);
               worst = std::max(worst, abs(lhs - rhs) / std::max(1.0, abs(lhs)));
             }
             return worst;
           });

  run_case(out, "star-pointwise/associativity",
           "the star product is associative", 1e-11, [&] {
             Rng rng(seed);
             double e = 0.0;
             for (int t = 0; t < 200; ++t) {
               const Series f = random_series(rng, 8, 0.8);
               const Series g = random_series(rng, 8, 0.8);
               const Series h = random_series(rng, 8, 0.8);
               e = std::max(e, coeff_distance(star(star(f, g), h), star(f, star(g, h))));
             }
             return e;
           });

  run_case(out, "star-pointwise/zero-sets",
           "a zero of the left factor kills the star product", 1e-10, [&] {
             Rng rng(seed);
             double e = 0.0;
             const Quaternion p{0.4, 0.3, 0.2, 0.0};
             const Series f({-p, kOne});  // q - p
             for (int t = 0; t < 20; ++t) {
               const Series g = random_series(rng, 8);
               e = std::max(e, abs(star(f, g).evaluate(p)));
             }
             const Series fs = symmetrize(f);
             const SliceCoords sc = decompose(p);
             for (const ImaginaryUnit& u : sample_sphere(16, 42)) {
               const Quaternion on_sphere = Quaternion{sc.x} + sc.y * u.u;
               e = std::max(e, abs(fs.evaluate(on_sphere)));
             }
             return e;
           });

  run_case(out, "star-pointwise/sphere-sup-conjugate",
           "a function and its conjugate share sphere suprema", 0.02, [&] {
             Rng rng(seed);
             const auto dirs = sample_sphere(256, 42);
             double worst = 0.0;
             for (int t = 0; t < 20; ++t) {
               const Series f = random_series(rng, 8);
               const Series fc = regular_conjugate(f);
               double sf = 0.0, sc = 0.0;
               for (const ImaginaryUnit& u : dirs) {
                 const Quaternion q = Quaternion{0.3} + 0.4 * u.u;
                 sf = std::max(sf, abs(f.evaluate(q)));
                 sc = std::max(sc, abs(fc.evaluate(q)));
               }
               worst = std::max(worst, std::fabs(sf - sc) / std::max(sf, 1e-12));
             }
             return worst;
           });

  run_case(out, "star-pointwise/twisted-composition",
           "composition distributes over star products up to a conjugated inner map",
           1e-7, [&] {
             Rng rng(seed);
             const std::size_t n_max = 48;
             double worst = 0.0;
             int evaluated = 0;
             for (int t = 0; t < 20; ++t) {
               Series f = random_series(rng, 4, 0.7);
               f.set_coeff(0, kOne + 0.2 * random_quat(rng));
               const Series g = random_series(rng, 4, 0.7);
               Series phi = random_series(rng, 4, 0.7);
               phi.set_coeff(0, Quaternion{});
               const Series h = compose(f, phi, V::odot_right, n_max);
               const Series psi =
                   star_trunc(star_trunc(star_reciprocal(h, n_max), phi, n_max), h, n_max);
               const Series lhs = compose(star(f, g), phi, V::odot_right, n_max);
               const Series rhs = star_trunc(h, compose(g, psi, V::odot_right, n_max), n_max);
               const Quaternion q = random_point(rng, 0.05 + 0.2 * rng.uniform());
               if (abs(h.evaluate(q)) <= 1e-6) continue;
               ++evaluated;
               const Quaternion lv = lhs.evaluate(q);
               const Quaternion rv = rhs.evaluate(q);
               worst = std::max(worst, abs(lv - rv) / std::max(1e-2, abs(lv)));
             }
             return evaluated >= 15 ? worst : kBad;
           });
}

// ---------------------------------------------------------------------------
// opnorm: operator norms of composition against closed forms
// ---------------------------------------------------------------------------

void suite_opnorm(std::vector<VerifyCase>& out, std::uint64_t seed) {
  run_case(out, "opnorm/moebius-closed-form",
           "automorphism composition norm ((1+a)/(1-a))^(1/2)", 0.0, [&] {
             double worst = 0.0;
             for (double a : {0.3, 0.5, 0.7}) {
               const double cf = std::sqrt((1.0 + a) / (1.0 - a));
               double prev = 0.0;
               for (std::size_t n : {std::size_t{64}, std::size_t{128}, std::size_t{256},
                                     std::size_t{512}}) {
                 const Series phi = mobius_series(Quaternion{a}, n);
                 const double sigma =
                     operator_norm(composition_matrix(phi, n, OperatorSide::right_linear_C));
                 if (sigma + 1e-9 < prev) return kBad;  // nested sections grow
                 prev = sigma;
                 if (n == 512) {
                   worst = std::max(worst, std::fabs(sigma - cf) / cf - 0.02);
                 }
               }
             }
             return std::max(0.0, worst);
           });

  run_case(out, "opnorm/left-right-agree",
           "the left- and right-linear composition operators share their norm",
           1e-7, [&] {
             const Quaternion a{0.3, 0.25, 0.2, -0.1};
             const Series phi = mobius_series(a, 96);
             const double c =
                 operator_norm(composition_matrix(phi, 96, OperatorSide::right_linear_C));
             const double d =
                 operator_norm(composition_matrix(phi, 96, OperatorSide::left_linear_D));
             return std::fabs(c - d) / std::max(c, 1e-12);
           });

  run_case(out, "opnorm/kernel-lower-bound",
           "normalized kernels witness the closed-form norm from below", 0.0, [&] {
             double e = 0.0;
             for (double a : {0.3, 0.7}) {
               const Series phi = mobius_series(Quaternion{a}, 512);
               const double lb = norm_lower_bound(phi, 64);
               const double cf = std::sqrt((1.0 + a) / (1.0 - a));
               if (lb > cf * (1.0 + 1e-9)) return kBad;
               e = std::max(e, std::max(0.0, 0.98 * cf - lb));
             }
             return e;
           });

  run_case(out, "opnorm/kernel-reproducing",
           "kernel coefficients reproduce point evaluation", 1e-11, [&] {
             Rng rng(seed);
             double e = 0.0;
             for (int t = 0; t < 50; ++t) {
               const Series f = random_series(rng, 12);
               const Quaternion w{0.3 * rng.normal(), 0.3 * rng.normal(), 0.0, 0.0};
               if (abs(w) >= 0.95) continue;
               const KernelVector kv = kernel_vector(w, 12);
               Quaternion ip{};
               for (std::size_t n = 0; n < kv.coeffs.size(); ++n) {
                 ip += conj(kv.coeffs[n]) * f.coeff(n);
               }
               e = std::max(e, abs(ip - f.evaluate(w)));
             }
             return e;
           });

  run_case(out, "opnorm/multiplier-isometry",
           "star multiplication by the Moebius factor is isometric", 0.0, [&] {
             Rng rng(seed);
             double worst = 0.0;
             for (int t = 0; t < 20; ++t) {
               const Series f = random_series(rng, 10);
               const Quaternion a =
                   t % 2 == 0 ? Quaternion{0.4} : Quaternion{0.3, 0.2, 0.0, 0.0};
               const IsometryCheck c = multiplier_isometry_check(f, a, 256);
               if (!c.pass) return kBad;
               worst = std::max(
                   worst, std::max(std::fabs(c.left - c.base), std::fabs(c.right - c.base)) -
                              c.tol);
             }
             return std::max(0.0, worst);
           });
}

// ---------------------------------------------------------------------------
// compactness: tail bounds for strict self-maps
// ---------------------------------------------------------------------------

void suite_compactness(std::vector<VerifyCase>& out, std::uint64_t) {
  run_case(out, "compactness/tail-bound",
           "finite sections converge geometrically for a strict self-map", 1e-9, [&] {
             const Series phi = left_mul(Quaternion{0.6}, mobius_series(Quaternion{0.3}, 100));
             double worst = -kBad;
             double prev = kBad;
             for (std::size_t n = 1; n <= 20; ++n) {
               const TailBoundCheck c = tail_bound_check(phi, n);
               const double pinned = std::pow(0.6, static_cast<double>(n + 1)) / 0.8;
               worst = std::max(worst, c.measured - pinned);
               if (c.measured > prev + 1e-9) return kBad;  // tails shrink with n
               prev = c.measured;
             }
             return worst;
           });

  run_case(out, "compactness/automorphism-contrast",
           "automorphism tails do not vanish", 0.0, [&] {
             const Series phi = mobius_series(Quaternion{0.3}, 100);
             const TailBoundCheck c = tail_bound_check(phi, 12);
             return c.measured >= 0.01 ? 0.0 : kBad;
           });
}

// ---------------------------------------------------------------------------
// denjoy-wolff: iteration dynamics
// ---------------------------------------------------------------------------

void suite_denjoy_wolff(std::vector<VerifyCase>& out, std::uint64_t) {
  const ImaginaryUnit unit_i(kQI);

  run_case(out, "denjoy-wolff/hyperbolic",
           "geometric convergence to the lower-multiplier boundary point", 1e-8, [&] {
             const Series h = slice_automorphism({-0.5, 0.0}, 0.0, unit_i, 128);
             const DenjoyWolffResult r = denjoy_wolff(h, 1e-6, 200);
             if (r.trace.empty() || r.trace.size() > 40) return kBad;
             for (std::size_t n = 5; n < r.trace.size(); ++n) {
               if (r.trace[n] > r.trace[n - 1] + 1e-12) return kBad;
             }
             return abs(r.limit - kOne);
           });

  run_case(out, "denjoy-wolff/spherical-attractor",
           "a sphere-fixing automorphism still drags interior orbits to one pole",
           1e-8, [&] {
             const Series s = slice_automorphism({0.0, -0.4}, 0.0, unit_i, 128);
             const DenjoyWolffResult r = denjoy_wolff(s, 1e-6, 200);
             if (r.trace.size() > 60) return kBad;
             return abs(r.limit - kQI);
           });

  run_case(out, "denjoy-wolff/iterate-consistency",
           "slice iteration equals repeated odot composition", 1e-9, [&] {
             const Series h = slice_automorphism({-0.5, 0.0}, 0.0, unit_i, 64);
             // Accumulate on the inner side; truncating the outer factor
             // loses tail mass because h(0) != 0.
             Series chain = Series::identity(1.0);
             double e = 0.0;
             for (std::size_t n = 1; n <= 5; ++n) {
               chain = compose(h, chain, V::odot_right, 64);
               e = std::max(e, coeff_distance(iterate(h, n, 64), chain));
             }
             return e;
           });

  run_case(out, "denjoy-wolff/strict-contraction",
           "iterates of q^2/2 collapse toward the origin", 1e-10, [&] {
             const Series f({Quaternion{}, Quaternion{}, Quaternion{0.5}}, 4.0);
             const Series it = iterate(f, 8, 256);
             double e = 0.0;
             for (std::size_t n = 0; n < 256; ++n) e = std::max(e, abs(it.coeff(n)));
             e = std::max(e, abs(it.coeff(256) - Quaternion{std::pow(2.0, -255.0)}));
             bool rejected = false;
             try {
               denjoy_wolff(f, 1e-6, 100);
             } catch (const UnsupportedMap&) {
               rejected = true;  // not a fractional linear map
             } catch (const NotSelfMap&) {
               rejected = true;
             }
             return rejected ? e : kBad;
           });
}

// ---------------------------------------------------------------------------
// hp-bounds: H^p growth, coefficient, and bracketing bounds
// ---------------------------------------------------------------------------

void suite_hp_bounds(std::vector<VerifyCase>& out, std::uint64_t seed) {
  run_case(out, "hp-bounds/moebius-bracket",
           "composition with a Moebius self-map distorts H^p norms boundedly",
           1e-6, [&] {
             Rng rng(seed);
             const Series phi = mobius_series(Quaternion{0.5}, 128);
             const QuadratureConfig quad{512, {0.5, 0.9, 0.99}, 16, cfg::default_seed};
             double worst = 0.0;
             for (int t = 0; t < 50; ++t) {
               const Series f = random_series(rng, 10);
               const Series gc = compose(f, phi, V::odot_right, 128);
               const Series gd = compose(f, phi, V::odot_left, 128);
               for (double p : {1.0, 2.0, 4.0}) {
                 const double nf = hp_norm(f, p, quad);
                 if (nf < 1e-12) continue;
                 const double rc = hp_norm(gc, p, quad) / nf;
                 const double rd = hp_norm(gd, p, quad) / nf;
                 const double lo_c = std::pow(2.0, -(2.0 - 1.0 / p)) * std::pow(3.0, -1.0 / p);
                 const double hi_c = std::pow(2.0, 2.0 - 1.0 / p) * std::pow(3.0, 1.0 / p);
                 const double lo_d = std::pow(2.0, -(2.0 + 1.0 / p)) * std::pow(3.0, -1.0 / p);
                 const double hi_d = std::pow(2.0, 2.0 + 1.0 / p) * std::pow(3.0, 1.0 / p);
                 worst = std::max({worst, lo_c - rc, rc - hi_c, lo_d - rd, rd - hi_d});
               }
             }
             return std::max(0.0, worst);
           });

  run_case(out, "hp-bounds/growth", "pointwise growth bounds hold", 0.0, [&] {
    Rng rng(seed);
    const double inf_p = std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const Series f = random_series(rng, 12);
      for (double p : {1.0, 2.0, 4.0, inf_p}) {
        for (double r : {0.3, 0.6, 0.85}) {
          const BoundCheck b = growth_bound_check(f, p, random_point(rng, r));
          if (!b.pass) worst = std::max(worst, b.lhs - b.rhs);
        }
      }
    }
    return worst;
  });

  run_case(out, "hp-bounds/cauchy", "coefficient bounds hold", 0.0, [&] {
    Rng rng(seed);
    const double inf_p = std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const Series f = random_series(rng, 12);
      for (double p : {1.0, 2.0, 4.0, inf_p}) {
        for (std::size_t n : {std::size_t{0}, std::size_t{2}, std::size_t{7}}) {
          const BoundCheck b = cauchy_coefficient_check(f, p, n);
          if (!b.pass) worst = std::max(worst, b.lhs - b.rhs);
        }
      }
    }
    return worst;
  });

  run_case(out, "hp-bounds/h2-under-sup",
           "the quadratic mean sits below the sup norm", 0.0, [&] {
             Rng rng(seed);
             double worst = 0.0;
             for (int t = 0; t < 20; ++t) {
               const Series f = random_series(rng, 10);
               const double h2 = h2_norm(f);
               const double sup = sup_norm_estimate(f, kLightQuad);
               worst = std::max(worst, h2 - sup * (1.0 + 1e-6) - 1e-9);
             }
             return std::max(0.0, worst);
           });
}

// ---------------------------------------------------------------------------
// h2-slice: slice independence of circle means
// ---------------------------------------------------------------------------

void suite_h2_slice(std::vector<VerifyCase>& out, std::uint64_t seed) {
  run_case(out, "h2-slice/slice-independence",
           "quadratic circle means are the same on every slice", 1e-8, [&] {
             Rng rng(seed);
             const Series f = random_series(rng, 10);
             double lo = kBad, hi = -kBad;
             for (const ImaginaryUnit& u : sample_sphere(20, 42)) {
               const double m = circle_mean_p(f, 0.9, u, 2.0, 1024);
               lo = std::min(lo, m);
               hi = std::max(hi, m);
             }
             return hi - lo;
           });

  run_case(out, "h2-slice/parseval",
           "circle means equal weighted coefficient sums", 1e-12, [&] {
             Rng rng(seed);
             double e = 0.0;
             for (int t = 0; t < 20; ++t) {
               const Series f = random_series(rng, 10);
               const ImaginaryUnit u = sample_sphere(8, seed + t)[t % 8];
               for (double r : {0.5, 0.9}) {
                 double target = 0.0;
                 for (std::size_t n = 0; n <= f.degree(); ++n) {
                   target += norm_sq(f.coeff(n)) * std::pow(r * r, static_cast<double>(n));
                 }
                 e = std::max(e, std::fabs(circle_mean_p(f, r, u, 2.0, 1024) - target) /
                                     std::max(1.0, target));
               }
             }
             return e;
           });

  run_case(out, "h2-slice/h2-consistency",
           "the sampled H2 norm approaches the coefficient norm from below", 0.0, [&] {
             Rng rng(seed);
             double worst = 0.0;
             for (int t = 0; t < 10; ++t) {
               const Series f = random_series(rng, 10);
               const double h2 = h2_norm(f);
               const double hp = hp_norm(f, 2.0, kLightQuad);
               worst = std::max(worst, hp - h2 * (1.0 + 1e-9));
               worst = std::max(worst, 0.9 * h2 - hp);
             }
             return std::max(0.0, worst);
           });
}

// ---------------------------------------------------------------------------
// representation: the two-point representation formula
// ---------------------------------------------------------------------------

void suite_representation(std::vector<VerifyCase>& out, std::uint64_t seed) {
  run_case(out, "representation/random-checks",
           "slice values on one plane determine all the others", 1e-11, [&] {
             Rng rng(seed);
             double e = 0.0;
             for (int t = 0; t < 100; ++t) {
               const Series f = random_series(rng, 8);
               const auto dirs = sample_sphere(64, seed + static_cast<std::uint64_t>(t));
               const ImaginaryUnit I = dirs[t % 32];
               const ImaginaryUnit K = dirs[32 + t % 32];
               const double x = 0.6 * (rng.uniform() - 0.5);
               const double y = 0.05 + 0.5 * rng.uniform();
               const Quaternion vp = f.evaluate(Quaternion{x} + y * I.u);
               const Quaternion vm = f.evaluate(Quaternion{x} - y * I.u);
               const Quaternion direct = f.evaluate(Quaternion{x} + y * K.u);
               e = std::max(e, abs(representation_value(vp, vm, I, K) - direct));
             }
             return e;
           });

  run_case(out, "representation/split-roundtrip",
           "splitting and extension are mutually inverse", 1e-12, [&] {
             Rng rng(seed);
             double e = 0.0;
             for (int t = 0; t < 50; ++t) {
               const Series f = random_series(rng, 8);
               const SliceSplit s = split(f, ImaginaryUnit(kQI));
               e = std::max(e, coeff_distance(
                                   extend(s.F, s.G, ImaginaryUnit(s.I), ImaginaryUnit(s.J)), f));
             }
             return e;
           });

  run_case(out, "representation/extension-values",
           "the extension agrees with F + G J on its base slice", 1e-12, [&] {
             Rng rng(seed);
             double e = 0.0;
             for (int t = 0; t < 50; ++t) {
               ComplexSeries F, G;
               F.coeffs.assign(7, {});
               G.coeffs.assign(7, {});
               for (auto& c : F.coeffs) c = {rng.normal(), rng.normal()};
               for (auto& c : G.coeffs) c = {rng.normal(), rng.normal()};
               const Series f = extend(F, G, ImaginaryUnit(kQI), ImaginaryUnit(kQJ));
               const std::complex<double> z(0.6 * (rng.uniform() - 0.5),
                                            0.6 * (rng.uniform() - 0.5));
               const Quaternion expect = embed_i(F.evaluate(z)) + embed_i(G.evaluate(z)) * kQJ;
               e = std::max(e, abs(f.evaluate(embed_i(z)) - expect));
             }
             return e;
           });

  run_case(out, "representation/sphere-zero-sets",
           "symmetrizations vanish on whole spheres", 1e-9, [&] {
             Rng rng(seed);
             double e = 0.0;
             const auto dirs = sample_sphere(32, 42);
             for (int t = 0; t < 20; ++t) {
               const Quaternion p = random_point(rng, 0.2 + 0.6 * rng.uniform());
               if (abs(im(p)) < 1e-3) continue;
               const Series fs = symmetrize(Series({-p, kOne}));
               const SliceCoords sc = decompose(p);
               for (const ImaginaryUnit& u : dirs) {
                 e = std::max(e, abs(fs.evaluate(Quaternion{sc.x} + sc.y * u.u)));
               }
             }
             return e;
           });
}

using SuiteFn = void (*)(std::vector<VerifyCase>&, std::uint64_t);

const std::map<std::string, SuiteFn>& suite_registry() {
  static const std::map<std::string, SuiteFn> reg = {
      {"examples", suite_examples},
      {"littlewood", suite_littlewood},
      {"conjugation", suite_conjugation},
      {"star-pointwise", suite_star_pointwise},
      {"opnorm", suite_opnorm},
      {"compactness", suite_compactness},
      {"denjoy-wolff", suite_denjoy_wolff},
      {"hp-bounds", suite_hp_bounds},
      {"h2-slice", suite_h2_slice},
      {"representation", suite_representation},
  };
  return reg;
}

}  // namespace

const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass:
      return "pass";
    case CaseStatus::fail:
      return "fail";
    case CaseStatus::flagged_discrepancy:
      return "flagged_discrepancy";
    case CaseStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

VerifyReport run_verify(const std::string& suite, std::uint64_t seed) {
  VerifyReport report;
  const auto& reg = suite_registry();
  if (suite == "all") {
    for (const auto& [name, fn] : reg) fn(report.cases, seed);
  } else {
    const auto it = reg.find(suite);
    if (it == reg.end()) {
      report.note = "unknown suite selector \"" + suite + "\"";
      return report;
    }
    it->second(report.cases, seed);
  }
  std::sort(report.cases.begin(), report.cases.end(),
            [](const VerifyCase& a, const VerifyCase& b) { return a.name < b.name; });
  for (const VerifyCase& c : report.cases) {
    switch (c.status) {
      case CaseStatus::pass:
        ++report.summary.pass;
        break;
      case CaseStatus::fail:
        ++report.summary.fail;
        break;
      case CaseStatus::flagged_discrepancy:
        ++report.summary.flagged;
        break;
      case CaseStatus::skipped:
        ++report.summary.skipped;
        break;
    }
  }
  return report;
}

}  // namespace sliceop
