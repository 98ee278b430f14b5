#include "sliceop/compose.hpp"

#include <cmath>
#include <cstdint>

#include "sliceop/hardy.hpp"

namespace sliceop {

namespace {

// Pascal triangle of C(n,k) in doubles (exact through n = 55, ~1 ulp beyond).
std::vector<std::vector<double>> binomials(std::size_t n_max) {
  std::vector<std::vector<double>> c(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    c[n].assign(n + 1, 1.0);
    for (std::size_t k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}

// Sample points filling 8 spheres of 64 points each inside |q| < cap; used
// by the range precondition of compose().
void check_range(const Series& f, const Series& phi) {
  if (!std::isfinite(f.radius())) return;  // condition vacuous
  const double cap =
      std::isfinite(phi.radius()) ? phi.radius() : 1.0;  // unbounded domain: certify the unit ball
  const auto dirs = sample_sphere(16, cfg::default_seed);
  for (std::size_t t = 1; t <= 8; ++t) {
    const double r = cap * 0.999 * static_cast<double>(t) / 8.0;
    for (const auto& I : dirs) {
      for (std::size_t s = 0; s < 4; ++s) {
        const double theta = 3.14159265358979323846 * (static_cast<double>(s) + 0.5) / 4.0;
        const Quaternion q = Quaternion{r * std::cos(theta)} + (r * std::sin(theta)) * I.u;
        if (!(abs(phi.evaluate(q)) < f.radius())) {
          throw RangeViolation("compose: phi leaves the domain of f on a sampled sphere");
        }
      }
    }
  }
}

Series compose_odot(const Series& f, const Series& phi, bool phi_on_left, std::size_t n_max) {
  Series h = Series::constant(f.coeff(f.degree()));
  for (std::size_t n = f.degree(); n-- > 0;) {
    h = phi_on_left ? star_trunc(phi, h, n_max) : star_trunc(h, phi, n_max);
    h.set_coeff(0, h.coeff(0) + f.coeff(n));
  }
  return Series(h.coeffs(), phi.radius());
}

Series compose_vlacci(const Series& f, const Series& phi, bool bell_on_left, std::size_t n_max,
                      VlacciEstimate* estimate) {
  if (n_max > 170) {
    throw InvalidArgument("compose: Taylor variants limited to degree 170 (factorial overflow)");
  }
  const Quaternion b0 = phi.coeff(0);
  if (!(abs(b0) < f.radius())) {
    throw DomainError("compose: phi(0) outside the domain of f");
  }

  // Derivative values f^(d)(b0), d = 1..min(n_max, deg f).
  const std::size_t d_top = std::min(n_max, f.degree());
  std::vector<Quaternion> derivs(d_top + 1);
  std::vector<double> deriv_tail(d_top + 1, 0.0);  // heuristic continuation term
  {
    Series der = f;
    const double rho = std::isfinite(f.radius()) ? abs(b0) / f.radius() : 0.0;
    for (std::size_t d = 1; d <= d_top; ++d) {
      der = derivative(der);
      derivs[d] = der.evaluate(b0);
      if (rho > 0.0 && rho < 1.0) {
        const double last = abs(der.coeff(der.degree()));
        deriv_tail[d] =
            last * std::pow(abs(b0), static_cast<double>(der.degree())) * rho / (1.0 - rho);
      }
    }
  }

  std::vector<Quaternion> args(n_max);  // args[m-1] = q_m = m! b_m
  for (std::size_t m = 1; m <= n_max; ++m) args[m - 1] = factorial(m) * phi.coeff(m);
  const auto parts = bell_parts(args, n_max);

  std::vector<Quaternion> out(n_max + 1);
  out[0] = f.evaluate(b0);
  std::vector<double> err(n_max + 1, 0.0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Quaternion acc{};
    double eacc = 0.0;
    const std::size_t top = std::min(n, d_top);
    for (std::size_t d = 1; d <= top; ++d) {
      const Quaternion& bell = parts[n][d];
      acc += bell_on_left ? bell * derivs[d] : derivs[d] * bell;
      eacc += abs(bell) * deriv_tail[d];
    }
    const double inv_fact = 1.0 / factorial(n);
    out[n] = inv_fact * acc;
    err[n] = inv_fact * eacc;
  }
  if (estimate) estimate->coeff_error = std::move(err);
  return Series(std::move(out), phi.radius());
}

}  // namespace

BellTable bell_table(const std::vector<Quaternion>& args) {
  const std::size_t n_max = args.size();
  if (n_max == 0) throw InvalidArgument("bell_table: needs at least one argument");
  if (n_max > 22) {
    throw InvalidArgument("bell_table: explicit chain enumeration refuses more than 22 arguments");
  }
  const auto binom = binomials(n_max);
  const auto q = [&](std::size_t m) { return args[m - 1]; };

  BellTable t;
  t.n_max = n_max;

  // Full rows by the recursion B_{m+1} = sum_k C(m,k) B_{m-k} q_{k+1}.
  std::vector<Quaternion> b(n_max + 1);
  b[0] = Quaternion{1.0};
  for (std::size_t m = 0; m < n_max; ++m) {
    Quaternion acc{};
    for (std::size_t k = 0; k <= m; ++k) acc += binom[m][k] * (b[m - k] * q(k + 1));
    b[m + 1] = acc;
  }
  t.rows.assign(b.begin() + 1, b.end());

  // Homogeneous parts by explicit enumeration of decreasing chains.
  t.parts_tri.assign(n_max * (n_max + 1) / 2, Quaternion{});
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t d = 1; d <= n; ++d) {
      Quaternion total{};
      // DFS over chains n = n_1 > n_2 > ... > n_d >= 1. `acc` holds the
      // ordered product of the difference factors found so far (rightmost
      // first); the chain's own last element contributes the leftmost
      // factor q_{n_d}.
      auto dfs = [&](auto&& self, std::size_t nt, std::size_t depth_left, double coeff,
                     const Quaternion& acc) -> void {
        if (depth_left == 0) {
          total += coeff * (q(nt) * acc);
          return;
        }
        // Next element needs room for depth_left-1 more strictly below it.
        for (std::size_t nx = depth_left; nx < nt; ++nx) {
          self(self, nx, depth_left - 1, coeff * binom[nt - 1][nx], q(nt - nx) * acc);
        }
      };
      dfs(dfs, n, d - 1, 1.0, Quaternion{1.0});
      t.parts_tri[(n - 1) * n / 2 + (d - 1)] = total;
    }
  }
  return t;
}

std::vector<std::vector<Quaternion>> bell_parts(const std::vector<Quaternion>& args,
                                                std::size_t n_max) {
  const auto binom = binomials(n_max);
  const auto q = [&](std::size_t m) { return m <= args.size() ? args[m - 1] : Quaternion{}; };
  std::vector<std::vector<Quaternion>> p(n_max + 1);
  p[0].assign(1, Quaternion{1.0});
  for (std::size_t n = 1; n <= n_max; ++n) {
    p[n].assign(n + 1, Quaternion{});
    for (std::size_t d = 1; d <= n; ++d) {
      Quaternion acc{};
      for (std::size_t k = 0; k + 1 <= n; ++k) {
        const std::size_t m = n - 1 - k;  // row holding B_{m, d-1}
        if (d - 1 > m) continue;
        const Quaternion& prev = p[m][d - 1];
        acc += binom[n - 1][k] * (prev * q(k + 1));
      }
      p[n][d] = acc;
    }
  }
  return p;
}

double factorial(std::size_t n) {
  if (n <= 20) {
    std::uint64_t acc = 1;
    for (std::uint64_t t = 2; t <= n; ++t) acc *= t;
    return static_cast<double>(acc);
  }
  double acc = factorial(20);
  for (std::size_t t = 21; t <= n; ++t) acc *= static_cast<double>(t);
  return acc;
}

Series star_power(const Series& phi, std::size_t n, std::size_t n_max) {
  Series acc = Series::constant(Quaternion{1.0}, phi.radius());
  for (std::size_t t = 0; t < n; ++t) acc = star_trunc(acc, phi, n_max);
  return acc;
}

Series compose(const Series& f, const Series& phi, CompositionVariant variant,
               std::size_t n_max, VlacciEstimate* estimate) {
  check_range(f, phi);
  switch (variant) {
    case CompositionVariant::odot_right:
      return compose_odot(f, phi, /*phi_on_left=*/true, n_max);
    case CompositionVariant::odot_left:
      return compose_odot(f, phi, /*phi_on_left=*/false, n_max);
    case CompositionVariant::vlacci_right:
      return compose_vlacci(f, phi, /*bell_on_left=*/true, n_max, estimate);
    case CompositionVariant::vlacci_left:
      return compose_vlacci(f, phi, /*bell_on_left=*/false, n_max, estimate);
    case CompositionVariant::bullet_up:
      return regular_conjugate(compose(regular_conjugate(f), regular_conjugate(phi),
                                       CompositionVariant::vlacci_left, n_max, estimate));
    case CompositionVariant::bullet_down:
      return regular_conjugate(compose(regular_conjugate(f), regular_conjugate(phi),
                                       CompositionVariant::vlacci_right, n_max, estimate));
  }
  throw InvalidArgument("compose: unknown variant");
}

Series iterate(const Series& f, std::size_t n, std::size_t n_max) {
  const auto slice = common_slice(f);
  if (!slice) throw NotSlicePreserving("iterate: coefficients span more than one slice");
  if (f.radius() < 1.0 - cfg::coeff_tol) {
    throw NotSelfMap("iterate: map is not defined on the whole unit ball");
  }
  if (sup_norm_estimate(f) > 1.0 + 1e-9) {
    throw NotSelfMap("iterate: sampled sup exceeds the unit ball");
  }
  if (n == 0) return Series::identity(f.radius());
  const ComplexSeries base = slice_restrict(f, *slice);
  ComplexSeries acc = base;
  for (std::size_t t = 1; t < n; ++t) acc = compose_classical(base, acc, n_max);
  return slice_embed(acc, *slice);
}

double existence_radius(const Series& f, const Series& phi) {
  if (!std::isfinite(f.radius())) return phi.radius();
  const Series a = abs_series(phi);
  const auto ok = [&](double r) { return abs(a.evaluate(Quaternion{r})) < f.radius(); };

  if (!ok(0.0)) return 0.0;
  double lo = 0.0;
  double hi = 0.0;
  if (std::isfinite(phi.radius())) {
    const double top = phi.radius() * (1.0 - 1e-12);
    if (ok(top)) return phi.radius();
    hi = top;
  } else {
    double u = 1.0;
    while (ok(u)) {
      lo = u;
      u *= 2.0;
      if (u > 1e18) return phi.radius();  // never binds (e.g. constant phi)
    }
    hi = u;
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace sliceop
