#include "sliceop/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "sliceop/compose.hpp"
#include "sliceop/rng.hpp"

namespace sliceop {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_quad(const QuadratureConfig& quad) {
  if (quad.angles < 4 || (quad.angles & (quad.angles - 1)) != 0) {
    throw InvalidArgument("quadrature: angles must be a power of two >= 4");
  }
  if (quad.radii.empty()) throw InvalidArgument("quadrature: needs at least one radius");
  double prev = 0.0;
  for (double r : quad.radii) {
    if (!(r > prev && r < 1.0)) {
      throw InvalidArgument("quadrature: radii must be ascending within (0, 1)");
    }
    prev = r;
  }
  if (quad.sphere_samples == 0) throw InvalidArgument("quadrature: needs at least one slice");
}

Quaternion circle_point(double r, double theta, const Quaternion& dir) {
  return Quaternion{r * std::cos(theta)} + (r * std::sin(theta)) * dir;
}

double conj_of(double x) { return x; }
std::complex<double> conj_of(const std::complex<double>& x) { return std::conj(x); }

template <typename T>
double vec_norm(const std::vector<T>& v) {
  double acc = 0.0;
  for (const T& x : v) acc += std::norm(std::complex<double>(x));
  return std::sqrt(acc);
}

template <typename T>
T dot_conj(const std::vector<T>& x, const std::vector<T>& y) {
  T acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += conj_of(x[i]) * y[i];
  return acc;
}

// Largest singular value of the k x k upper bidiagonal matrix with diagonal
// `alpha` and superdiagonal `beta`, via Sturm bisection on the tridiagonal
// B^H B (diag alpha_i^2 + beta_{i-1}^2, offdiag alpha_i beta_i).
double bidiagonal_top_sv(const std::vector<double>& alpha, const std::vector<double>& beta) {
  const std::size_t k = alpha.size();
  if (k == 0) return 0.0;
  std::vector<double> d(k), e(k > 0 ? k - 1 : 0);
  for (std::size_t i = 0; i < k; ++i) {
    const double bprev = i == 0 ? 0.0 : beta[i - 1];
    d[i] = alpha[i] * alpha[i] + bprev * bprev;
    if (i + 1 < k) e[i] = alpha[i] * beta[i];
  }
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double eprev = i == 0 ? 0.0 : std::fabs(e[i - 1]);
    const double enext = i + 1 < k ? std::fabs(e[i]) : 0.0;
    hi = std::max(hi, d[i] + eprev + enext);  // Gershgorin
  }
  const auto count_below = [&](double x) {
    std::size_t cnt = 0;
    double q = d[0] - x;
    if (q < 0.0) ++cnt;
    for (std::size_t i = 1; i < k; ++i) {
      const double esq = e[i - 1] * e[i - 1];
      q = d[i] - x - esq / (q == 0.0 ? 1e-300 : q);
      if (q < 0.0) ++cnt;
    }
    return cnt;
  };
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(mid) == k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return std::sqrt(0.5 * (lo + hi));
}

// Largest singular value of the n x n matrix stored row-major in `a`, via
// Golub-Kahan-Lanczos bidiagonalization with full reorthogonalization. The
// Ritz value grows monotonically with the subspace, so stagnation is a sound
// stopping signal even when the top of the spectrum clusters and plain power
// iteration stalls. With the cap at n the factorization is exact.
template <typename T>
double largest_singular_value(const std::vector<T>& a, std::size_t n) {
  bool nonzero = false;
  for (const T& x : a) {
    if (std::norm(std::complex<double>(x)) != 0.0) {
      nonzero = true;
      break;
    }
  }
  if (!nonzero || n == 0) return 0.0;

  const auto matvec = [&](const std::vector<T>& v, std::vector<T>& out) {
    for (std::size_t r = 0; r < n; ++r) {
      T acc{};
      const T* row = a.data() + r * n;
      for (std::size_t c = 0; c < n; ++c) acc += row[c] * v[c];
      out[r] = acc;
    }
  };
  const auto matvec_adj = [&](const std::vector<T>& v, std::vector<T>& out) {
    std::fill(out.begin(), out.end(), T{});
    for (std::size_t r = 0; r < n; ++r) {
      const T* row = a.data() + r * n;
      const T vr = v[r];
      for (std::size_t c = 0; c < n; ++c) out[c] += conj_of(row[c]) * vr;
    }
  };

  Rng rng(cfg::default_seed);
  std::vector<T> v(n), u(n), w(n);
  for (T& x : v) x = T(rng.normal());
  const double vn = vec_norm(v);
  for (T& x : v) x = x * (1.0 / vn);

  std::vector<std::vector<T>> basis_v, basis_u;
  std::vector<double> alpha, beta;
  double sv = 0.0;
  double prev_sv = -1.0;
  const std::size_t cap = n;
  for (std::size_t k = 0; k < cap; ++k) {
    basis_v.push_back(v);
    matvec(v, u);
    if (k > 0) {
      const double b = beta.back();
      const std::vector<T>& ul = basis_u.back();
      for (std::size_t t = 0; t < n; ++t) u[t] = u[t] - ul[t] * b;
    }
    for (const auto& uu : basis_u) {
      const T dp = dot_conj(uu, u);
      for (std::size_t t = 0; t < n; ++t) u[t] = u[t] - uu[t] * dp;
    }
    const double al = vec_norm(u);
    if (al <= 1e-14 * std::max(1.0, sv)) break;  // invariant subspace reached
    for (T& x : u) x = x * (1.0 / al);
    alpha.push_back(al);
    basis_u.push_back(u);

    matvec_adj(u, w);
    for (std::size_t t = 0; t < n; ++t) w[t] = w[t] - v[t] * al;
    for (const auto& vv : basis_v) {
      const T dp = dot_conj(vv, w);
      for (std::size_t t = 0; t < n; ++t) w[t] = w[t] - vv[t] * dp;
    }
    const double be = vec_norm(w);
    if (be <= 1e-14 * std::max(1.0, sv)) break;  // invariant subspace reached
    for (T& x : w) x = x * (1.0 / be);
    beta.push_back(be);
    v = w;

    if ((k + 1) % 5 == 0 || k + 1 == cap) {
      sv = bidiagonal_top_sv(alpha, beta);
      if (std::fabs(sv - prev_sv) <= 1e-12 * std::max(1.0, sv)) return sv;
      prev_sv = sv;
    }
  }
  return bidiagonal_top_sv(alpha, beta);
}

}  // namespace

double h2_norm(const Series& f) {
  double acc = 0.0;
  for (const Quaternion& a : f.coeffs()) acc += norm_sq(a);
  return std::sqrt(acc);
}

double circle_mean_p(const Series& f, double r, const ImaginaryUnit& I, double p,
                     std::size_t angles) {
  if (angles < 4 || (angles & (angles - 1)) != 0) {
    throw InvalidArgument("circle_mean_p: angles must be a power of two >= 4");
  }
  if (!(p > 0.0)) throw InvalidArgument("circle_mean_p: requires p > 0");
  if (!(r > 0.0)) throw DomainError("circle_mean_p: requires r > 0");
  double acc = 0.0;
  for (std::size_t t = 0; t < angles; ++t) {
    const double theta = 2.0 * kPi * static_cast<double>(t) / static_cast<double>(angles);
    const double m = abs(f.evaluate(circle_point(r, theta, I.u)));
    acc += p == 2.0 ? m * m : std::pow(m, p);
  }
  return acc / static_cast<double>(angles);
}

double hp_norm(const Series& f, double p, const QuadratureConfig& quad) {
  if (std::isinf(p)) return sup_norm_estimate(f, quad);
  if (!(p >= 1.0)) throw InvalidArgument("hp_norm: requires p >= 1");
  if (f.radius() < 1.0) throw DomainError("hp_norm: function must be regular on the unit ball");
  validate_quad(quad);
  const auto dirs = sample_sphere(quad.sphere_samples, quad.seed);

  // Monotonicity spot check on the first slice: p-means are nondecreasing
  // in r for functions regular on the ball.
  double prev = -1.0;
  for (double r : quad.radii) {
    const double m = circle_mean_p(f, r, ImaginaryUnit(dirs.front().u), p, quad.angles);
    if (m < prev - 1e-6 * std::max(1.0, prev)) {
      throw Error("hp_norm: p-means decreased with radius; input is not regular on the ball");
    }
    prev = m;
  }

  double best = 0.0;
  const double top = quad.radii.back();
  for (const auto& I : dirs) best = std::max(best, circle_mean_p(f, top, I, p, quad.angles));
  return std::pow(best, 1.0 / p);
}

double sup_norm_estimate(const Series& f, const QuadratureConfig& quad) {
  validate_quad(quad);
  const double r = f.radius() > 1.0 ? 1.0 : f.radius() * (1.0 - 1e-6);
  double best = 0.0;
  if (const auto slice = common_slice(f)) {
    constexpr std::size_t kNodes = 4096;
    for (std::size_t t = 0; t < kNodes; ++t) {
      const double theta = 2.0 * kPi * static_cast<double>(t) / kNodes;
      best = std::max(best, abs(f.evaluate(circle_point(r, theta, slice->u))));
    }
    return best;
  }
  const auto dirs = sample_sphere(quad.sphere_samples, quad.seed);
  for (const auto& I : dirs) {
    for (std::size_t t = 0; t < quad.angles; ++t) {
      const double theta = 2.0 * kPi * static_cast<double>(t) / static_cast<double>(quad.angles);
      best = std::max(best, abs(f.evaluate(circle_point(r, theta, I.u))));
    }
  }
  return best;
}

BoundCheck growth_bound_check(const Series& f, double p, const Quaternion& q,
                              const QuadratureConfig& quad) {
  const double nsq = norm_sq(q);
  if (!(nsq < 1.0)) throw DomainError("growth_bound_check: requires |q| < 1");
  BoundCheck out;
  out.lhs = abs(f.evaluate(q));
  if (std::isinf(p)) {
    out.rhs = sup_norm_estimate(f, quad);
  } else if (p == 2.0) {
    out.rhs = h2_norm(f) / std::sqrt(1.0 - nsq);
  } else {
    out.rhs = std::sqrt(2.0) * std::pow(1.0 - nsq, -1.0 / p) * hp_norm(f, p, quad);
  }
  out.pass = out.lhs <= out.rhs * (1.0 + 1e-9) + 1e-12;
  return out;
}

BoundCheck cauchy_coefficient_check(const Series& f, double p, std::size_t n,
                                    const QuadratureConfig& quad) {
  BoundCheck out;
  out.lhs = abs(f.coeff(n));
  if (std::isinf(p)) {
    // sup_norm_estimate samples the circle of radius min(1, R(1 - 1e-6));
    // the coefficient estimate pays back that radius: |a_n| <= M(r)/r^n.
    const double r = f.radius() > 1.0 ? 1.0 : f.radius() * (1.0 - 1e-6);
    out.rhs = sup_norm_estimate(f, quad) / std::pow(r, static_cast<double>(n));
  } else {
    const double np = static_cast<double>(n) * p;
    out.rhs = std::sqrt(2.0) * std::exp(1.0 / p) * std::pow(1.0 + 0.5 * np, 1.0 / p) *
              hp_norm(f, p, quad);
  }
  out.pass = out.lhs <= out.rhs * (1.0 + 1e-9) + 1e-12;
  return out;
}

std::vector<Quaternion> OperatorMatrix::apply(const std::vector<Quaternion>& v) const {
  std::vector<Quaternion> in(dim_);
  const std::size_t n = std::min(dim_, v.size());
  for (std::size_t t = 0; t < n; ++t) {
    in[t] = side_ == OperatorSide::left_linear_D ? conj(v[t]) : v[t];
  }
  std::vector<Quaternion> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Quaternion acc{};
    for (std::size_t c = 0; c < dim_; ++c) acc += m_[r * dim_ + c] * in[c];
    out[r] = acc;
  }
  if (side_ == OperatorSide::left_linear_D) {
    for (Quaternion& q : out) q = conj(q);
  }
  return out;
}

OperatorMatrix composition_matrix(const Series& phi, std::size_t n_max, OperatorSide side) {
  if (phi.radius() < 1.0 - 1e-12) {
    throw NotSelfMap("composition_matrix: map is not defined on the whole unit ball");
  }
  if (sup_norm_estimate(phi) > 1.0 + 1e-9) {
    throw NotSelfMap("composition_matrix: sampled sup exceeds the unit ball");
  }
  const Series base = side == OperatorSide::left_linear_D ? regular_conjugate(phi) : phi;
  OperatorMatrix m(n_max + 1, side);
  m.at(0, 0) = Quaternion{1.0};
  Series acc = Series::constant(Quaternion{1.0});
  for (std::size_t c = 1; c <= n_max; ++c) {
    acc = star_trunc(acc, base, n_max);
    for (std::size_t r = 0; r <= acc.degree(); ++r) m.at(r, c) = acc.coeff(r);
  }
  return m;
}

double operator_norm(const OperatorMatrix& m) {
  const std::size_t n = m.dim();
  bool real_entries = true;
  for (std::size_t r = 0; r < n && real_entries; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Quaternion& q = m.at(r, c);
      if (q.x != 0.0 || q.y != 0.0 || q.z != 0.0) {
        real_entries = false;
        break;
      }
    }
  }
  if (real_entries) {
    // The complex embedding of a real matrix is M (x) I_2: same top singular
    // value at a quarter of the work.
    std::vector<double> a(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m.at(r, c).w;
    }
    return largest_singular_value(a, n);
  }
  // Each entry w+xi+yj+zk becomes the 2x2 block [[w+xi, y+zi],
  // [-(y-zi), w-xi]]; the embedding is an algebra map and an isometry of
  // coefficient vectors, so singular values agree with the quaternion action.
  const std::size_t n2 = 2 * n;
  std::vector<std::complex<double>> a(n2 * n2);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Quaternion& q = m.at(r, c);
      const std::complex<double> alpha{q.w, q.x};
      const std::complex<double> beta{q.y, q.z};
      a[(2 * r) * n2 + 2 * c] = alpha;
      a[(2 * r) * n2 + 2 * c + 1] = beta;
      a[(2 * r + 1) * n2 + 2 * c] = -std::conj(beta);
      a[(2 * r + 1) * n2 + 2 * c + 1] = std::conj(alpha);
    }
  }
  return largest_singular_value(a, n2);
}

KernelVector kernel_vector(const Quaternion& w, std::size_t n_max) {
  if (!(abs(w) < 1.0)) throw DomainError("kernel_vector: requires |w| < 1");
  KernelVector out;
  out.w = w;
  out.coeffs.resize(n_max + 1);
  Quaternion pw{1.0};
  for (std::size_t t = 0; t <= n_max; ++t) {
    out.coeffs[t] = pw;
    pw = pw * conj(w);
  }
  return out;
}

Series kernel_series(const Quaternion& w, std::size_t n_max) {
  KernelVector kv = kernel_vector(w, n_max);
  const double aw = abs(w);
  return Series(std::move(kv.coeffs), aw > 0.0 ? 1.0 / aw : kInfRadius);
}

double norm_lower_bound(const Series& phi, std::size_t samples) {
  if (samples == 0) throw InvalidArgument("norm_lower_bound: needs at least one angle");
  if (phi.radius() < 1.0 - 1e-12) {
    throw NotSelfMap("norm_lower_bound: map is not defined on the whole unit ball");
  }
  const auto slice = common_slice(phi);
  const Quaternion I = slice ? slice->u : Quaternion::i();
  const double radii[] = {0.0, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999};
  double best = 0.0;
  for (double r : radii) {
    const std::size_t count = r == 0.0 ? 1 : samples;
    for (std::size_t t = 0; t < count; ++t) {
      const double theta = 2.0 * kPi * static_cast<double>(t) / static_cast<double>(count);
      const Quaternion w = circle_point(r, theta, I);
      const double npw = norm_sq(phi.evaluate(w));
      if (npw >= 1.0) continue;  // ratio not certifiable at boundary contact
      best = std::max(best, std::sqrt((1.0 - r * r) / (1.0 - npw)));
    }
  }
  return best;
}

LittlewoodCheck littlewood_check(const Series& f, const Series& phi, std::size_t n_max) {
  if (abs(phi.coeff(0)) > 1e-12) {
    throw PreconditionViolated("littlewood_check: phi(0) must vanish");
  }
  if (f.degree() * 4 > n_max) {
    throw PreconditionViolated("littlewood_check: needs deg f <= n_max / 4");
  }
  QuadratureConfig light;
  light.angles = 128;
  light.sphere_samples = 16;
  if (sup_norm_estimate(phi, light) > 1.0 + 1e-9) {
    throw PreconditionViolated("littlewood_check: phi is not a self-map of the ball");
  }
  LittlewoodCheck out;
  out.norm_right = h2_norm(compose(f, phi, CompositionVariant::odot_right, n_max));
  out.norm_left = h2_norm(compose(f, phi, CompositionVariant::odot_left, n_max));
  out.bound = h2_norm(f) + 1e-9;
  out.margin = out.bound - std::max(out.norm_right, out.norm_left);
  out.pass = out.margin >= 0.0;
  return out;
}

TailBoundCheck tail_bound_check(const Series& phi, std::size_t n_max) {
  const double s = sup_norm_estimate(phi);
  if (s >= 1.0 - 1e-9) throw PreconditionViolated("tail_bound_check: needs sup phi < 1");
  const std::size_t big = 4 * (n_max + 1);
  OperatorMatrix m = composition_matrix(phi, big - 1, OperatorSide::right_linear_C);
  for (std::size_t c = 0; c <= n_max; ++c) {
    for (std::size_t r = 0; r < big; ++r) m.at(r, c) = Quaternion{};
  }
  TailBoundCheck out;
  out.measured = operator_norm(m);
  out.bound = std::pow(s, static_cast<double>(n_max + 1)) / std::sqrt(1.0 - s * s);
  out.pass = out.measured <= out.bound + 1e-9;
  return out;
}

IsometryCheck multiplier_isometry_check(const Series& f, const Quaternion& a,
                                        std::size_t n_max) {
  const double aa = abs(a);
  if (!(aa < 1.0)) throw InvalidArgument("multiplier_isometry_check: requires |a| < 1");
  std::vector<Quaternion> mc(n_max + 1);
  mc[0] = a;
  const double drop = 1.0 - norm_sq(a);
  Quaternion pw{1.0};
  for (std::size_t t = 1; t <= n_max; ++t) {
    mc[t] = (-drop) * pw;
    pw = pw * conj(a);
  }
  const Series m(std::move(mc), 1.0);

  IsometryCheck out;
  out.base = h2_norm(f);
  out.left = h2_norm(star_trunc(m, f, n_max));
  out.right = h2_norm(star_trunc(f, m, n_max));
  // Dropped factor tail acts as an H^infinity multiplier of size
  // (1-|a|^2) |a|^(n_max - deg f) / (1 - |a|); the dropped product tail is
  // smaller still.
  const std::size_t gap = n_max > f.degree() ? n_max - f.degree() : 0;
  const double tail = drop * std::pow(aa, static_cast<double>(gap)) / (1.0 - aa);
  out.tol = 2.0 * tail * out.base + 1e-11 * std::max(1.0, out.base);
  out.pass =
      std::abs(out.left - out.base) <= out.tol && std::abs(out.right - out.base) <= out.tol;
  return out;
}

}  // namespace sliceop
