#include <doctest.h>

#include <cmath>

#include "sliceop/compose.hpp"
#include "sliceop/errors.hpp"
#include "sliceop/moebius.hpp"
#include "sliceop/rng.hpp"
#include "sliceop/series.hpp"

using namespace sliceop;
using V = CompositionVariant;

namespace {

const Quaternion one{1.0, 0.0, 0.0, 0.0};
const Quaternion qi = Quaternion::i();
const Quaternion qj = Quaternion::j();
const Quaternion qk = Quaternion::k();

Series random_series(Rng& rng, std::size_t deg, double decay = 1.0) {
  std::vector<Quaternion> c(deg + 1);
  double scale = 1.0;
  for (auto& a : c) {
    a = scale * Quaternion{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    scale *= decay;
  }
  return Series(std::move(c));
}

}  // namespace

TEST_CASE("factorials are exact") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(5) == 120.0);
  CHECK(factorial(20) == 2432902008176640000.0);
}

TEST_CASE("noncommutative Bell rows, explicit low orders") {
  const std::vector<Quaternion> args = {qj, 2.0 * qi, Quaternion{}, Quaternion{}};
  const BellTable t = bell_table(args);
  CHECK(abs(t.row(1) - qj) == 0.0);
  CHECK(abs(t.part(2, 1) - 2.0 * qi) == 0.0);
  CHECK(abs(t.part(2, 2) - qj * qj) == 0.0);
  // B_{3,2} = q2 q1 + 2 q1 q2 with q1 = j, q2 = 2i
  CHECK(abs(t.part(3, 2) - (2.0 * (qi * qj) + 4.0 * (qj * qi))) <= 1e-15);
  // B_{4,2}(j, 2i, 0, 0) = 3 q2^2 = -12
  CHECK(abs(t.part(4, 2) - Quaternion{-12.0}) <= 1e-12);
  for (std::size_t n = 1; n <= 4; ++n) {
    Quaternion sum{};
    for (std::size_t d = 1; d <= n; ++d) sum += t.part(n, d);
    CHECK(abs(t.row(n) - sum) <= 1e-12);
  }
  // the polynomial-cost recursion agrees with the chain enumeration
  const auto parts = bell_parts(args, 4);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t d = 1; d <= n; ++d) CHECK(abs(parts[n][d] - t.part(n, d)) <= 1e-12);
  }
  // real arguments give the classical Bell value
  const BellTable tr = bell_table({Quaternion{1.5}, Quaternion{-0.25}, Quaternion{2.0}});
  CHECK(abs(tr.row(3) - Quaternion{4.25}) <= 1e-13);

  CHECK_THROWS_AS(bell_table({}), InvalidArgument);
  CHECK_THROWS_AS(bell_table(std::vector<Quaternion>(23)), InvalidArgument);
}

TEST_CASE("star powers multiply out") {
  const Series phi({Quaternion{}, qj, qi});  // q j + q^2 i
  const Series p2 = star_power(phi, 2, 8);
  CHECK(coeff_distance(p2, Series({{}, {}, {-1.0}, {}, {-1.0}})) <= 1e-15);
  CHECK(coeff_distance(star_power(phi, 3, 12), star(p2, phi)) <= 1e-14);
  CHECK(coeff_distance(star_power(phi, 0, 4), Series::constant(one)) == 0.0);
  CHECK(coeff_distance(star_power(phi, 1, 4), star_trunc(phi, Series::constant(one), 4)) ==
        0.0);
}

TEST_CASE("worked composition of f=q^2 with phi=q^2 i + q j") {
  const Series f = Series::monomial(2, one);
  const Series phi({Quaternion{}, qj, qi});
  const Series odot_target({{}, {}, {-1.0}, {}, {-1.0}});
  CHECK(coeff_distance(compose(f, phi, V::odot_right, 8), odot_target) <= 1e-13);
  CHECK(coeff_distance(compose(f, phi, V::odot_left, 8), odot_target) <= 1e-13);

  const Series taylor_target({{}, {}, {-1.0}, {0.0, 0.0, 0.0, -2.0 / 3.0}, {-1.0}});
  CHECK(coeff_distance(compose(f, phi, V::vlacci_right, 8), taylor_target) <= 1e-13);
  CHECK(coeff_distance(compose(f, phi, V::vlacci_left, 8), taylor_target) <= 1e-13);
}

TEST_CASE("Taylor composition reproduces a linear outer map") {
  // The coefficient formula collapses to c_n = b_n when f = q, so the
  // composite is phi itself for both one-sided variants.
  const Series phi = Series::monomial(2, qi);
  CHECK(coeff_distance(compose(Series::identity(), phi, V::vlacci_right, 6), phi) <= 1e-15);
  CHECK(coeff_distance(compose(Series::identity(), phi, V::vlacci_left, 6), phi) <= 1e-15);
}

TEST_CASE("odot composition is not associative across mixed maps") {
  const Series f = Series::monomial(2, one);
  const Series g({one, qi});
  const Series phi({Quaternion{}, qj});
  const Series lhs = compose(compose(f, g, V::odot_right, 8), phi, V::odot_right, 8);
  const Series rhs = compose(f, compose(g, phi, V::odot_right, 8), V::odot_right, 8);
  CHECK(coeff_distance(lhs, Series({one, 2.0 * (qj * qi), one})) <= 1e-14);
  CHECK(coeff_distance(rhs, Series({one, 2.0 * (qj * qi), -one})) <= 1e-14);
  CHECK(coeff_distance(lhs - rhs, Series::monomial(2, 2.0 * one)) <= 1e-14);

  const Series lhs_l = compose(compose(f, g, V::odot_left, 8), phi, V::odot_left, 8);
  const Series rhs_l = compose(f, compose(g, phi, V::odot_left, 8), V::odot_left, 8);
  CHECK(coeff_distance(lhs_l, Series({one, 2.0 * (qi * qj), one})) <= 1e-14);
  CHECK(coeff_distance(rhs_l, Series({one, 2.0 * (qi * qj), -one})) <= 1e-14);
}

TEST_CASE("composition does not distribute over star products") {
  const Series f = Series::monomial(2, qi);
  const Series g({one, qj});
  const Series phi = Series::monomial(1, qk);
  const Series lhs = compose(star(f, g), phi, V::odot_right, 8);
  CHECK(coeff_distance(lhs, Series({{}, {}, -qi, one})) <= 1e-14);
  const Series rhs =
      star(compose(f, phi, V::odot_right, 8), compose(g, phi, V::odot_right, 8));
  CHECK(coeff_distance(rhs, Series({{}, {}, -qi, -one})) <= 1e-14);
}

TEST_CASE("left composition with an affine slice shift") {
  const Series f = Series::monomial(2, qi);
  const Series g({one, qj});
  const Series psi({qi, one});  // q + i
  const Series t1({Quaternion{0, -1, -1, 0}, Quaternion{-2, 0, 0, -3}, Quaternion{0, 1, 3, 0},
                   Quaternion{0, 0, 0, 1}});
  CHECK(coeff_distance(compose(star(f, g), psi, V::odot_left, 8), t1) <= 1e-14);
  const Series t2({Quaternion{0, -1, -1, 0}, Quaternion{-2, 0, 0, 1}, Quaternion{0, 1, -1, 0},
                   Quaternion{0, 0, 0, 1}});
  CHECK(coeff_distance(star(compose(f, psi, V::odot_left, 8), compose(g, psi, V::odot_left, 8)),
                       t2) <= 1e-14);
}

TEST_CASE("bullet variants are conjugates of the Taylor variants") {
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    const Series f = random_series(rng, 5, 0.6);
    const Series phi = random_series(rng, 5, 0.6);
    const Series up = compose(f, phi, V::bullet_up, 20);
    const Series up_expect = regular_conjugate(
        compose(regular_conjugate(f), regular_conjugate(phi), V::vlacci_left, 20));
    CHECK(coeff_distance(up, up_expect) <= 1e-11);
    const Series down = compose(f, phi, V::bullet_down, 20);
    const Series down_expect = regular_conjugate(
        compose(regular_conjugate(f), regular_conjugate(phi), V::vlacci_right, 20));
    CHECK(coeff_distance(down, down_expect) <= 1e-11);
  }
}

TEST_CASE("all variants agree on slice-preserving data") {
  Rng rng(22);
  for (int t = 0; t < 10; ++t) {
    std::vector<Quaternion> fc(5), pc(5);
    double s = 1.0;
    for (std::size_t n = 0; n < 5; ++n) {
      fc[n] = Quaternion{s * rng.normal()};
      pc[n] = Quaternion{s * rng.normal()};
      s *= 0.6;
    }
    const Series f(fc), phi(pc);
    const Series base = compose(f, phi, V::odot_right, 20);
    for (V v : {V::odot_left, V::vlacci_right, V::vlacci_left, V::bullet_up, V::bullet_down}) {
      CHECK(coeff_distance(compose(f, phi, v, 20), base) <= 1e-10);
    }
  }
}

TEST_CASE("truncation degree caps the composite") {
  const Series f({one, one, one, one});
  const Series phi({Quaternion{}, qi, qj});
  const Series h = compose(f, phi, V::odot_right, 5);
  CHECK(h.degree() <= 5);
  const Series full = compose(f, phi, V::odot_right, 12);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(abs(h.coeff(n) - full.coeff(n)) <= 1e-15);
}

TEST_CASE("composite carries the inner radius") {
  const Series f({one, one});
  const Series phi({Quaternion{}, Quaternion{0.5}}, 2.0);
  CHECK(compose(f, phi, V::odot_right, 8).radius() == 2.0);
}

TEST_CASE("Taylor variants surface a roundoff estimate") {
  const Series f = Series::monomial(2, one);
  const Series phi({Quaternion{}, qj, qi});
  VlacciEstimate est;
  compose(f, phi, V::vlacci_right, 8, &est);
  REQUIRE(est.coeff_error.size() == 9);
  for (double e : est.coeff_error) {
    CHECK(e >= 0.0);
    CHECK(e <= 1e-10);  // tiny inputs, tiny accumulated roundoff
  }
}

TEST_CASE("iterate composes the map with itself") {
  const ImaginaryUnit ui(qi);
  const Series h = slice_automorphism({-0.5, 0.0}, 0.0, ui, 64);
  CHECK(abs(iterate(h, 2, 64).evaluate(Quaternion{}) - Quaternion{0.8}) <= 1e-9);
  CHECK(coeff_distance(iterate(h, 1, 64), h) == 0.0);
  CHECK(coeff_distance(iterate(h, 0, 64), Series::identity(1.0)) == 0.0);

  // Keep the accumulated series on the inner side: truncating the outer
  // factor drops tail mass that feeds low coefficients whenever h(0) != 0.
  Series chain = Series::identity(1.0);
  for (std::size_t n = 1; n <= 4; ++n) {
    chain = compose(h, chain, V::odot_right, 64);
    CHECK(coeff_distance(iterate(h, n, 64), chain) <= 1e-10);
  }
}

TEST_CASE("existence radius of the Taylor composition") {
  const Series f = mobius_series(Quaternion{0.3}, 64);
  CHECK(std::fabs(existence_radius(f, mobius_series(Quaternion{0.5}, 256)) - 0.5) <= 2e-6);

  // tight along the Moebius family: radius 1/(1+2a), always above 1/3
  for (double a : {0.5, 0.9, 0.99}) {
    const double r = existence_radius(f, mobius_series(Quaternion{a}, 400));
    CHECK(r >= 1.0 / 3.0 - 1e-6);
    CHECK(std::fabs(r - 1.0 / (1.0 + 2.0 * a)) <= 2e-6);
  }

  // entire outer functions only see the inner radius
  const Series entire({one, qi, qj});
  CHECK(existence_radius(entire, mobius_series(Quaternion{0.5}, 64)) == 1.0);
  CHECK(std::isinf(existence_radius(entire, Series({Quaternion{}, Quaternion{0.25}}))));
}
