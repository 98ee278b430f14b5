#include "sliceop/series.hpp"

#include <algorithm>
#include <cmath>

namespace sliceop {

namespace {

double dot3(const Quaternion& a, const Quaternion& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

}  // namespace

Quaternion Series::evaluate(const Quaternion& q) const {
  if (!(abs(q) < radius_)) {
    throw DomainError("Series::evaluate: point outside the radius of convergence");
  }
  Quaternion acc = coeffs_.back();
  for (std::size_t n = coeffs_.size() - 1; n-- > 0;) {
    acc = q * acc + coeffs_[n];
  }
  return acc;
}

Series& Series::operator+=(const Series& r) {
  if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (std::size_t n = 0; n < r.coeffs_.size(); ++n) coeffs_[n] += r.coeffs_[n];
  radius_ = std::min(radius_, r.radius_);
  return *this;
}

Series& Series::operator-=(const Series& r) {
  if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (std::size_t n = 0; n < r.coeffs_.size(); ++n) coeffs_[n] -= r.coeffs_[n];
  radius_ = std::min(radius_, r.radius_);
  return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }

Series left_mul(const Quaternion& c, const Series& f) {
  std::vector<Quaternion> out(f.coeffs().size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = c * f.coeffs()[n];
  return Series(std::move(out), f.radius());
}

Series right_mul(const Series& f, const Quaternion& c) {
  std::vector<Quaternion> out(f.coeffs().size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = f.coeffs()[n] * c;
  return Series(std::move(out), f.radius());
}

Series star(const Series& f, const Series& g) {
  return star_trunc(f, g, f.degree() + g.degree());
}

Series star_trunc(const Series& f, const Series& g, std::size_t n_max) {
  const std::size_t dg = std::min(f.degree() + g.degree(), n_max);
  std::vector<Quaternion> out(dg + 1);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  for (std::size_t k = 0; k < a.size() && k <= dg; ++k) {
    const Quaternion& ak = a[k];
    const std::size_t top = std::min(b.size() - 1, dg - k);
    for (std::size_t m = 0; m <= top; ++m) {
      out[k + m] += ak * b[m];
    }
  }
  return Series(std::move(out), std::min(f.radius(), g.radius()));
}

Series regular_conjugate(const Series& f) {
  std::vector<Quaternion> out(f.coeffs().size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = conj(f.coeffs()[n]);
  return Series(std::move(out), f.radius());
}

Series symmetrize(const Series& f) {
  Series s = star(f, regular_conjugate(f));
  std::vector<Quaternion> out(s.coeffs().size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    const Quaternion& c = s.coeffs()[n];
    const double residue = abs(im(c));
    if (residue > cfg::coeff_tol * std::max(1.0, abs(c))) {
      throw Error("symmetrize: non-real coefficient residue beyond tolerance");
    }
    out[n] = Quaternion{c.w};
  }
  return Series(std::move(out), s.radius());
}

Series star_reciprocal(const Series& f, std::size_t n_max) {
  const Quaternion a0 = f.coeff(0);
  if (abs(a0) <= 1e-12) {
    throw NotInvertible("star_reciprocal: constant term too close to zero");
  }
  const Quaternion a0inv = inverse(a0);
  std::vector<Quaternion> g(n_max + 1);
  g[0] = a0inv;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Quaternion acc{};
    const std::size_t top = std::min(n, f.degree());
    for (std::size_t k = 1; k <= top; ++k) acc += f.coeffs()[k] * g[n - k];
    g[n] = -(a0inv * acc);
  }
  return Series(std::move(g), f.radius());
}

Series shift(const Series& f) {
  if (f.degree() == 0) return Series({Quaternion{}}, f.radius());
  std::vector<Quaternion> out(f.coeffs().begin() + 1, f.coeffs().end());
  return Series(std::move(out), f.radius());
}

Series abs_series(const Series& f) {
  std::vector<Quaternion> out(f.coeffs().size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = Quaternion{abs(f.coeffs()[n])};
  return Series(std::move(out), f.radius());
}

Series derivative(const Series& f) {
  if (f.degree() == 0) return Series({Quaternion{}}, f.radius());
  std::vector<Quaternion> out(f.degree());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = static_cast<double>(n + 1) * f.coeffs()[n + 1];
  }
  return Series(std::move(out), f.radius());
}

double coeff_distance(const Series& f, const Series& g) {
  double worst = 0.0;
  const std::size_t top = std::max(f.degree(), g.degree());
  for (std::size_t n = 0; n <= top; ++n) worst = std::max(worst, abs(f.coeff(n) - g.coeff(n)));
  return worst;
}

bool has_real_coeffs(const Series& f) {
  for (const Quaternion& c : f.coeffs()) {
    if (abs(im(c)) > cfg::coeff_tol) return false;
  }
  return true;
}

std::optional<ImaginaryUnit> common_slice(const Series& f) {
  std::optional<ImaginaryUnit> slice;
  for (const Quaternion& c : f.coeffs()) {
    const Quaternion v = im(c);
    const double n = abs(v);
    if (n <= cfg::coeff_tol) continue;
    if (!slice) {
      slice = ImaginaryUnit(v / n);
      continue;
    }
    // Orthogonal residue of v against the candidate axis (sign-insensitive:
    // C_I and C_{-I} are the same slice).
    const double along = dot3(v, slice->u);
    const Quaternion rest = v - along * slice->u;
    if (abs(rest) > cfg::coeff_tol) return std::nullopt;
  }
  if (!slice) slice = ImaginaryUnit(Quaternion::i());  // real series: any slice
  return slice;
}

std::complex<double> ComplexSeries::evaluate(const std::complex<double>& z) const {
  if (!(std::abs(z) < radius)) {
    throw DomainError("ComplexSeries::evaluate: point outside the radius of convergence");
  }
  std::complex<double> acc = coeffs.back();
  for (std::size_t n = coeffs.size() - 1; n-- > 0;) acc = z * acc + coeffs[n];
  return acc;
}

ComplexSeries mul_trunc(const ComplexSeries& a, const ComplexSeries& b, std::size_t n_max) {
  const std::size_t dg = std::min(a.degree() + b.degree(), n_max);
  ComplexSeries out;
  out.coeffs.assign(dg + 1, {});
  out.radius = std::min(a.radius, b.radius);
  for (std::size_t k = 0; k < a.coeffs.size() && k <= dg; ++k) {
    const std::complex<double> ak = a.coeffs[k];
    const std::size_t top = std::min(b.coeffs.size() - 1, dg - k);
    for (std::size_t m = 0; m <= top; ++m) out.coeffs[k + m] += ak * b.coeffs[m];
  }
  return out;
}

ComplexSeries compose_classical(const ComplexSeries& outer, const ComplexSeries& inner,
                                std::size_t n_max) {
  ComplexSeries acc;
  acc.coeffs = {outer.coeffs.back()};
  acc.radius = inner.radius;
  for (std::size_t n = outer.coeffs.size() - 1; n-- > 0;) {
    acc = mul_trunc(acc, inner, n_max);
    acc.coeffs[0] += outer.coeffs[n];
  }
  acc.radius = inner.radius;
  return acc;
}

SliceSplit split(const Series& f, const ImaginaryUnit& I, const ImaginaryUnit& J) {
  if (std::fabs(dot3(I.u, J.u)) > cfg::unit_tol) {
    throw InvalidArgument("split: J must be orthogonal to I");
  }
  const Quaternion IJ = I.u * J.u;
  SliceSplit out;
  out.I = I.u;
  out.J = J.u;
  out.F.coeffs.assign(f.degree() + 1, {});
  out.G.coeffs.assign(f.degree() + 1, {});
  out.F.radius = out.G.radius = f.radius();
  for (std::size_t n = 0; n <= f.degree(); ++n) {
    const Quaternion& a = f.coeffs()[n];
    // {1, I, J, IJ} is an orthonormal real basis, so components are dots.
    out.F.coeffs[n] = {a.w, dot3(a, I.u)};
    out.G.coeffs[n] = {dot3(a, J.u), dot3(a, IJ)};
  }
  return out;
}

SliceSplit split(const Series& f, const ImaginaryUnit& I) {
  const Quaternion probes[3] = {Quaternion::j(), Quaternion::k(), Quaternion::i()};
  for (const Quaternion& p : probes) {
    const Quaternion v = p - dot3(p, I.u) * I.u;
    const double n = abs(v);
    if (n > 1e-3) return split(f, I, ImaginaryUnit(v / n));
  }
  throw InvalidArgument("split: could not build an orthogonal slice basis");
}

Series extend(const ComplexSeries& F, const ComplexSeries& G, const ImaginaryUnit& I,
              const ImaginaryUnit& J) {
  if (std::fabs(dot3(I.u, J.u)) > cfg::unit_tol) {
    throw InvalidArgument("extend: J must be orthogonal to I");
  }
  const std::size_t top = std::max(F.degree(), G.degree());
  std::vector<Quaternion> out(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    const std::complex<double> fn = F.coeff(n);
    const std::complex<double> gn = G.coeff(n);
    const Quaternion fi = Quaternion{fn.real()} + fn.imag() * I.u;
    const Quaternion gi = Quaternion{gn.real()} + gn.imag() * I.u;
    out[n] = fi + gi * J.u;
  }
  return Series(std::move(out), std::min(F.radius, G.radius));
}

ComplexSeries slice_restrict(const Series& f, const ImaginaryUnit& I) {
  ComplexSeries out;
  out.coeffs.assign(f.degree() + 1, {});
  out.radius = f.radius();
  for (std::size_t n = 0; n <= f.degree(); ++n) {
    const Quaternion& a = f.coeffs()[n];
    const double along = dot3(a, I.u);
    const Quaternion rest = im(a) - along * I.u;
    if (abs(rest) > cfg::coeff_tol * std::max(1.0, abs(a))) {
      throw NotSlicePreserving("slice_restrict: coefficient outside the slice");
    }
    out.coeffs[n] = {a.w, along};
  }
  return out;
}

Series slice_embed(const ComplexSeries& F, const ImaginaryUnit& I) {
  std::vector<Quaternion> out(F.coeffs.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = Quaternion{F.coeffs[n].real()} + F.coeffs[n].imag() * I.u;
  }
  return Series(std::move(out), F.radius);
}

Quaternion representation_value(const Quaternion& value_plus, const Quaternion& value_minus,
                                const ImaginaryUnit& I, const ImaginaryUnit& K) {
  const Quaternion avg = 0.5 * (value_plus + value_minus);
  return avg + 0.5 * ((K.u * I.u) * (value_minus - value_plus));
}

}  // namespace sliceop
