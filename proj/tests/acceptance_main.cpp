// Acceptance gate: replays the headline results end to end and prints one
// [PASS]/[FAIL] line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "sliceop/compose.hpp"
#include "sliceop/config.hpp"
#include "sliceop/hardy.hpp"
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

int failures = 0;

void report(int id, const std::string& what, double max_error, double tol, double seconds,
            double budget) {
  const bool ok = max_error <= tol && seconds <= budget;
  if (!ok) ++failures;
  std::printf("[%s] %2d %-34s max_error=%.3e (tol %.0e)  %.2fs (budget %.0fs)\n",
              ok ? "PASS" : "FAIL", id, what.c_str(), max_error, tol, seconds, budget);
  std::fflush(stdout);
}

template <typename Body>
void criterion(int id, const std::string& what, double tol, double budget, Body body) {
  const auto t0 = std::chrono::steady_clock::now();
  double err;
  try {
    err = body();
  } catch (const std::exception& e) {
    std::printf("  (exception: %s)\n", e.what());
    err = std::numeric_limits<double>::infinity();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, what, err, tol, seconds, budget);
}

Quaternion random_quat(Rng& rng) {
  return {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
}

Series random_series(Rng& rng, std::size_t max_deg, double decay = 1.0) {
  const std::size_t deg =
      1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(max_deg));
  std::vector<Quaternion> c(std::min(deg, max_deg) + 1);
  double s = 1.0;
  for (auto& a : c) {
    a = s * random_quat(rng);
    s *= decay;
  }
  return Series(std::move(c));
}

Quaternion random_point(Rng& rng, double r) {
  Quaternion u{0.0, rng.normal(), rng.normal(), rng.normal()};
  const double n = abs(u);
  const double theta = rng.uniform(0.0, 6.283185307179586);
  if (n < 1e-12) return Quaternion{r * std::cos(theta)};
  return r * (Quaternion{std::cos(theta)} + std::sin(theta) * (u / n));
}

double criterion_examples() {
  double e = 0.0;
  {
    const Series f = Series::monomial(2, one);
    const Series phi({Quaternion{}, qj, qi});
    e = std::max(e, coeff_distance(compose(f, phi, V::odot_right, 8),
                                   Series({{}, {}, {-1.0}, {}, {-1.0}})));
    e = std::max(e, coeff_distance(compose(f, phi, V::vlacci_right, 8),
                                   Series({{}, {}, {-1.0}, {0, 0, 0, -2.0 / 3.0}, {-1.0}})));
  }
  {
    const Series f = Series::monomial(2, one);
    const Series g({one, qi});
    const Series phi({Quaternion{}, qj});
    const Series lhs = compose(compose(f, g, V::odot_right, 8), phi, V::odot_right, 8);
    e = std::max(e, coeff_distance(lhs, Series({one, 2.0 * (qj * qi), one})));
    const Series rhs = compose(f, compose(g, phi, V::odot_right, 8), V::odot_right, 8);
    e = std::max(e, coeff_distance(rhs, Series({one, 2.0 * (qj * qi), -one})));
  }
  {
    const Series f = Series::monomial(2, qi);
    const Series g({one, qj});
    const Series phi = Series::monomial(1, qk);
    e = std::max(e, coeff_distance(compose(star(f, g), phi, V::odot_right, 8),
                                   Series({{}, {}, -qi, one})));
  }
  return e;
}

double criterion_littlewood() {
  Rng rng(cfg::default_seed);
  const QuadratureConfig light{128, {0.5, 0.9, 0.99}, 16, cfg::default_seed};
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Series f = random_series(rng, 16);
    Series phi = random_series(rng, 16);
    phi.set_coeff(0, Quaternion{});
    const double sup = sup_norm_estimate(phi, light);
    if (sup > 1e-9) phi = left_mul(Quaternion{0.9 / sup}, phi);
    const LittlewoodCheck c = littlewood_check(f, phi, 256);
    worst = std::max(worst, -c.margin);
  }
  return std::max(0.0, worst);
}

double criterion_opnorm() {
  double worst = 0.0;
  for (double a : {0.3, 0.5, 0.7}) {
    const double cf = std::sqrt((1.0 + a) / (1.0 - a));
    double prev = 0.0, last = 0.0;
    for (std::size_t n : {std::size_t{64}, std::size_t{128}, std::size_t{256},
                          std::size_t{512}}) {
      const Series phi = mobius_series(Quaternion{a}, n);
      last = operator_norm(composition_matrix(phi, n, OperatorSide::right_linear_C));
      if (last + 1e-9 < prev) return std::numeric_limits<double>::infinity();
      prev = last;
    }
    worst = std::max(worst, std::fabs(last - cf) / cf - 0.02);
    const double lb = norm_lower_bound(mobius_series(Quaternion{a}, 512), 64);
    if (lb > cf * (1.0 + 1e-9)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, (0.98 * cf - lb) / cf);
  }
  return std::max(0.0, worst);
}

double criterion_compactness() {
  const Series phi = left_mul(Quaternion{0.6}, mobius_series(Quaternion{0.3}, 100));
  double worst = 0.0;
  for (std::size_t n = 1; n <= 20; ++n) {
    const TailBoundCheck c = tail_bound_check(phi, n);
    worst = std::max(worst, c.measured - std::pow(0.6, static_cast<double>(n + 1)) / 0.8);
  }
  return std::max(0.0, worst);
}

double criterion_denjoy_wolff() {
  const Series h = slice_automorphism({-0.5, 0.0}, 0.0, ImaginaryUnit(qi), 128);
  const DenjoyWolffResult r = denjoy_wolff(h, 1e-6, 40);
  if (r.trace.empty() || r.trace.back() >= 1e-6) return std::numeric_limits<double>::infinity();
  for (std::size_t n = 5; n < r.trace.size(); ++n) {
    if (r.trace[n] > r.trace[n - 1] + 1e-12) return std::numeric_limits<double>::infinity();
  }
  return abs(r.limit - one);
}

double criterion_conjugation() {
  Rng rng(cfg::default_seed);
  double e = 0.0;
  for (int t = 0; t < 500; ++t) {
    // Decaying coefficients keep the star powers O(1); flat data amplifies
    // roundoff in the degree-32 expansion beyond the coefficientwise bound.
    const Series f = random_series(rng, 8, 0.5);
    const Series g = random_series(rng, 8, 0.5);
    e = std::max(e, coeff_distance(regular_conjugate(star(f, g)),
                                   star(regular_conjugate(g), regular_conjugate(f))));
    e = std::max(e, coeff_distance(regular_conjugate(compose(f, g, V::odot_right, 32)),
                                   compose(regular_conjugate(f), regular_conjugate(g),
                                           V::odot_left, 32)));
  }
  return e;
}

double criterion_slice_independence() {
  Rng rng(cfg::default_seed);
  std::vector<Quaternion> c(11);
  for (auto& a : c) a = random_quat(rng);
  const Series f(std::move(c));
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const ImaginaryUnit& u : sample_sphere(20, cfg::default_seed)) {
    const double m = circle_mean_p(f, 0.9, u, 2.0, 1024);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  return hi - lo;
}

double criterion_pointwise() {
  Rng rng(cfg::default_seed);
  double worst = 0.0;
  int done = 0;
  while (done < 200) {
    const Series f = random_series(rng, 10);
    const Series g = random_series(rng, 10);
    const Quaternion q = random_point(rng, 0.05 + 0.85 * rng.uniform());
    const Quaternion fq = f.evaluate(q);
    if (abs(fq) <= 1e-6) continue;
    ++done;
    const Quaternion lhs = star(f, g).evaluate(q);
    const Quaternion rhs = fq * g.evaluate(inverse(fq) * q * fq);
    worst = std::max(worst, abs(lhs - rhs) / std::max(1.0, abs(lhs)));
  }
  return worst;
}

double criterion_hp_bracket() {
  Rng rng(cfg::default_seed);
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
      const double scale = std::pow(3.0, 1.0 / p);
      const double hc = std::pow(2.0, 2.0 - 1.0 / p) * scale;
      const double hd = std::pow(2.0, 2.0 + 1.0 / p) * scale;
      worst = std::max({worst, 1.0 / hc - rc, rc - hc, 1.0 / hd - rd, rd - hd});
    }
  }
  return std::max(0.0, worst);
}

double criterion_representation() {
  Rng rng(cfg::default_seed);
  double e = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Series f = random_series(rng, 8);
    const auto dirs = sample_sphere(64, cfg::default_seed + static_cast<std::uint64_t>(t));
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
}

}  // namespace

int main() {
  criterion(1, "worked composition examples", 1e-12, 1.0, criterion_examples);
  criterion(2, "littlewood subordination x1000", 0.0, 30.0, criterion_littlewood);
  criterion(3, "moebius operator norms", 0.0, 60.0, criterion_opnorm);
  criterion(4, "compactness tail bound", 1e-9, 20.0, criterion_compactness);
  criterion(5, "denjoy-wolff hyperbolic orbit", 1e-5, 10.0, criterion_denjoy_wolff);
  criterion(6, "conjugation identities x500", 1e-11, 60.0, criterion_conjugation);
  criterion(7, "slice independence of h2 means", 1e-8, 10.0, criterion_slice_independence);
  criterion(8, "pointwise star formula x200", 1e-9, 10.0, criterion_pointwise);
  criterion(9, "hp bracketing under composition", 1e-6, 120.0, criterion_hp_bracket);
  criterion(10, "representation formula x100", 1e-11, 10.0, criterion_representation);
  if (failures == 0) std::printf("acceptance: all 10 criteria pass\n");
  return failures;
}
