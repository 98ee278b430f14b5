#include <doctest.h>

#include <cmath>
#include <limits>

#include "sliceop/compose.hpp"
#include "sliceop/errors.hpp"
#include "sliceop/hardy.hpp"
#include "sliceop/moebius.hpp"
#include "sliceop/rng.hpp"
#include "sliceop/series.hpp"

using namespace sliceop;

namespace {

const Quaternion one{1.0, 0.0, 0.0, 0.0};
const Quaternion qi = Quaternion::i();
const Quaternion qj = Quaternion::j();

Series random_series(Rng& rng, std::size_t deg) {
  std::vector<Quaternion> c(deg + 1);
  for (auto& a : c) a = Quaternion{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
  return Series(std::move(c));
}

constexpr double kInfP = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("h2 norm is the coefficient l2 norm") {
  CHECK(h2_norm(Series::monomial(7, 2.0 * qi)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(h2_norm(Series({one, qj})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  // Moebius factors are inner: unit norm
  CHECK(std::fabs(h2_norm(mobius_series(Quaternion{0.5}, 256)) - 1.0) <= 1e-10);
  CHECK(std::fabs(h2_norm(mobius_series(Quaternion{0.3, 0.2, 0.0, 0.0}, 256)) - 1.0) <= 1e-10);
}

TEST_CASE("circle means are exact Parseval sums on every slice") {
  Rng rng(31);
  const Series f = random_series(rng, 10);
  for (double r : {0.5, 0.9}) {
    double target = 0.0;
    for (std::size_t n = 0; n <= f.degree(); ++n) {
      target += norm_sq(f.coeff(n)) * std::pow(r * r, static_cast<double>(n));
    }
    for (const ImaginaryUnit& u : sample_sphere(6, 31)) {
      CHECK(std::fabs(circle_mean_p(f, r, u, 2.0, 512) - target) <= 1e-12 * (1.0 + target));
    }
  }
}

TEST_CASE("hp norms are ordered in p and consistent with h2") {
  Rng rng(32);
  const Series f = random_series(rng, 8);
  const QuadratureConfig quad{512, {0.5, 0.9, 0.99}, 16, 42};
  const double n1 = hp_norm(f, 1.0, quad);
  const double n2 = hp_norm(f, 2.0, quad);
  const double n4 = hp_norm(f, 4.0, quad);
  const double sup = sup_norm_estimate(f, quad);
  CHECK(n1 <= n2 * (1.0 + 1e-9));
  CHECK(n2 <= n4 * (1.0 + 1e-9));
  CHECK(n4 <= sup * (1.0 + 1e-9));
  // the sampled quadratic mean approaches the coefficient norm from below
  CHECK(n2 <= h2_norm(f) * (1.0 + 1e-9));
  CHECK(n2 >= 0.9 * h2_norm(f));
  CHECK(hp_norm(f, kInfP, quad) == sup);
}

TEST_CASE("sup norm estimate saturates at the unit boundary") {
  // Radius beyond 1 clamps the sampling circle to |q| = 1 exactly.
  CHECK(sup_norm_estimate(Series::identity(2.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sup_norm_estimate(Series::identity(1.0)) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(sup_norm_estimate(Series::constant(3.0 * qj)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("growth bound holds and its kernel case is tight") {
  const Quaternion w{0.4, 0.0, 0.0, 0.0};
  const Series kw = kernel_series(w, 256);
  const BoundCheck b = growth_bound_check(kw, 2.0, w);
  CHECK(b.pass);
  CHECK(std::fabs(b.lhs - b.rhs) <= 1e-9);

  Rng rng(33);
  for (int t = 0; t < 25; ++t) {
    const Series f = random_series(rng, 10);
    const Quaternion q{0.3 * rng.normal(), 0.3 * rng.normal(), 0.1 * rng.normal(),
                       0.1 * rng.normal()};
    if (norm_sq(q) >= 0.9) continue;
    for (double p : {1.0, 2.0, 4.0, kInfP}) CHECK(growth_bound_check(f, p, q).pass);
  }
  CHECK_THROWS_AS(growth_bound_check(Series({one}), 2.0, Quaternion{1.0}), DomainError);
}

TEST_CASE("cauchy coefficient bound holds with monomial equality at p=inf") {
  const BoundCheck m = cauchy_coefficient_check(Series::monomial(5, one), kInfP, 5);
  CHECK(m.pass);
  CHECK(std::fabs(m.lhs - m.rhs) <= 1e-12);

  Rng rng(34);
  const Series f = random_series(rng, 12);
  for (double p : {1.0, 2.0, 4.0, kInfP}) {
    for (std::size_t n = 0; n <= 12; ++n) CHECK(cauchy_coefficient_check(f, p, n).pass);
  }
}

TEST_CASE("operator matrices act like their columns") {
  OperatorMatrix m(2, OperatorSide::right_linear_C);
  m.at(0, 0) = Quaternion{3.0};
  m.at(1, 1) = one;
  CHECK(operator_norm(m) == doctest::Approx(3.0).epsilon(1e-9));
  m.at(0, 0) = 3.0 * qi;  // modulus is what matters for the real-linear norm
  CHECK(operator_norm(m) == doctest::Approx(3.0).epsilon(1e-9));

  const auto out = m.apply({one, one});
  CHECK(approx_equal(out[0], 3.0 * qi, 1e-15));
  CHECK(approx_equal(out[1], one, 1e-15));
}

TEST_CASE("composition matrix of the identity map is the identity") {
  const Series id = Series::identity(1.0);
  for (OperatorSide side : {OperatorSide::right_linear_C, OperatorSide::left_linear_D}) {
    const OperatorMatrix m = composition_matrix(id, 8, side);
    CHECK(operator_norm(m) == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK_THROWS_AS(composition_matrix(Series({Quaternion{}, Quaternion{1.5}}), 8,
                                     OperatorSide::right_linear_C),
                  NotSelfMap);
}

TEST_CASE("composition matrix columns hold star powers") {
  const Series phi = mobius_series(Quaternion{0.3}, 24);
  const OperatorMatrix m = composition_matrix(phi, 24, OperatorSide::right_linear_C);
  const Series p3 = star_power(phi, 3, 24);
  for (std::size_t r = 0; r <= 24; ++r) {
    CHECK(abs(m.at(r, 3) - p3.coeff(r)) <= 1e-13);
  }
  // both sides agree on the norm for a Moebius inner map
  const double c = operator_norm(m);
  const double d =
      operator_norm(composition_matrix(phi, 24, OperatorSide::left_linear_D));
  CHECK(std::fabs(c - d) / c <= 1e-7);
}

TEST_CASE("kernel vectors reproduce evaluation") {
  Rng rng(35);
  const Series f = random_series(rng, 10);
  const Quaternion w{0.2, -0.3, 0.1, 0.05};
  const KernelVector kv = kernel_vector(w, 24);
  Quaternion ip{};
  for (std::size_t n = 0; n < kv.coeffs.size(); ++n) ip += conj(kv.coeffs[n]) * f.coeff(n);
  CHECK(abs(ip - f.evaluate(w)) <= 1e-12);
  CHECK(std::fabs(h2_norm(kernel_series(w, 256)) - 1.0 / std::sqrt(1.0 - norm_sq(w))) <= 1e-10);
}

TEST_CASE("norm lower bound stays under the closed form") {
  for (double a : {0.3, 0.7}) {
    const double cf = std::sqrt((1.0 + a) / (1.0 - a));
    const double lb = norm_lower_bound(mobius_series(Quaternion{a}, 512), 64);
    CHECK(lb <= cf * (1.0 + 1e-9));
    CHECK(lb >= 0.98 * cf);
  }
}

TEST_CASE("littlewood check passes for origin-fixing self-maps") {
  Rng rng(36);
  const Series f = random_series(rng, 4);
  const Series phi({Quaternion{}, Quaternion{0.5}});
  const LittlewoodCheck c = littlewood_check(f, phi, 64);
  CHECK(c.pass);
  CHECK(c.margin >= 0.0);
  CHECK(c.norm_right <= c.bound);
  CHECK(c.norm_left <= c.bound);

  CHECK_THROWS_AS(littlewood_check(f, Series({Quaternion{0.5}, Quaternion{0.2}}), 64),
                  PreconditionViolated);
  CHECK_THROWS_AS(littlewood_check(random_series(rng, 40), phi, 64), PreconditionViolated);
  CHECK_THROWS_AS(littlewood_check(f, Series({Quaternion{}, Quaternion{1.5}}), 64),
                  PreconditionViolated);
}

TEST_CASE("tail bound decays for strict self-maps and not for automorphisms") {
  const Series strict = left_mul(Quaternion{0.6}, mobius_series(Quaternion{0.3}, 100));
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{5}, std::size_t{8}}) {
    const TailBoundCheck c = tail_bound_check(strict, n);
    CHECK(c.pass);
    CHECK(c.measured <= c.bound * (1.0 + 1e-9) + 1e-12);
    CHECK(c.measured <= std::pow(0.6, static_cast<double>(n + 1)) / 0.8 + 1e-9);
    CHECK(c.measured <= prev + 1e-9);
    prev = c.measured;
  }

  const TailBoundCheck autop = tail_bound_check(mobius_series(Quaternion{0.3}, 100), 12);
  CHECK(autop.measured >= 0.01);  // no compactness for an automorphism

  CHECK_THROWS_AS(tail_bound_check(Series::constant(one), 4), PreconditionViolated);
}

TEST_CASE("star multiplication by a Moebius factor is an isometry") {
  Rng rng(37);
  for (int t = 0; t < 5; ++t) {
    const Series f = random_series(rng, 10);
    for (const Quaternion& a : {Quaternion{0.4}, Quaternion{0.3, 0.2, 0.0, 0.0}}) {
      const IsometryCheck c = multiplier_isometry_check(f, a, 256);
      CHECK(c.pass);
      CHECK(std::fabs(c.left - c.base) <= c.tol);
      CHECK(std::fabs(c.right - c.base) <= c.tol);
    }
  }
}
