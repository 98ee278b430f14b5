#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "sliceop/quaternion.hpp"

namespace sliceop {

inline constexpr double kInfRadius = std::numeric_limits<double>::infinity();

// Truncated power series sum_n q^n a_n with quaternion coefficients written
// on the RIGHT of the powers, together with a nominal radius of convergence
// in (0, inf]. This is the standard form for slice regular functions on a
// ball centered at the origin; because multiplication is not commutative,
// the coefficient side matters everywhere downstream.
class Series {
 public:
  // The zero series (single zero coefficient, infinite radius).
  Series() : coeffs_(1), radius_(kInfRadius) {}

  explicit Series(std::vector<Quaternion> coeffs, double radius = kInfRadius)
      : coeffs_(std::move(coeffs)), radius_(radius) {
    if (coeffs_.empty()) coeffs_.resize(1);
    if (!(radius_ > 0.0)) throw InvalidArgument("Series: radius must be positive");
  }

  static Series constant(const Quaternion& a, double radius = kInfRadius) {
    return Series({a}, radius);
  }
  // The identity map q.
  static Series identity(double radius = kInfRadius) {
    return Series({Quaternion{}, Quaternion{1.0}}, radius);
  }
  // q^n * a.
  static Series monomial(std::size_t n, const Quaternion& a, double radius = kInfRadius) {
    std::vector<Quaternion> c(n + 1);
    c[n] = a;
    return Series(std::move(c), radius);
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  double radius() const { return radius_; }
  const std::vector<Quaternion>& coeffs() const { return coeffs_; }

  // Coefficient a_n; zero beyond the stored degree.
  Quaternion coeff(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Quaternion{};
  }
  // Sets a_n, growing the coefficient vector as needed.
  void set_coeff(std::size_t n, const Quaternion& a) {
    if (n >= coeffs_.size()) coeffs_.resize(n + 1);
    coeffs_[n] = a;
  }

  // Drops trailing coefficients below cfg::trailing_tol in magnitude,
  // always keeping at least the constant term.
  Series& normalize() {
    while (coeffs_.size() > 1 && abs(coeffs_.back()) < cfg::trailing_tol) coeffs_.pop_back();
    return *this;
  }

  // Horner evaluation with the powers of q on the left:
  // a_0 + q(a_1 + q(a_2 + ...)). Throws DomainError when |q| >= radius.
  Quaternion evaluate(const Quaternion& q) const;

  Series& operator+=(const Series& r);
  Series& operator-=(const Series& r);

 private:
  std::vector<Quaternion> coeffs_;
  double radius_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);

// c * f: multiplies every coefficient by c from the left (equals the
// *-product of the constant series c with f).
Series left_mul(const Quaternion& c, const Series& f);
// f * c: multiplies every coefficient by c from the right.
Series right_mul(const Series& f, const Quaternion& c);

// *-product (coefficient convolution): (f*g)_n = sum_k f_k g_{n-k}, with the
// f-coefficients on the left of each product. Result radius is the minimum
// of the operand radii.
Series star(const Series& f, const Series& g);
// Same, truncated to degree at most n_max. Truncation is exact for the kept
// coefficients: degree-m output depends only on degrees <= m of the inputs.
Series star_trunc(const Series& f, const Series& g, std::size_t n_max);

// Regular conjugate f^c: conjugates every coefficient. Anti-homomorphism:
// (f*g)^c = g^c * f^c.
Series regular_conjugate(const Series& f);

// Symmetrization f^s = f * f^c. The result has real coefficients; imaginary
// residue above cfg::coeff_tol (scaled) indicates an arithmetic fault and
// throws, otherwise it is zeroed exactly.
Series symmetrize(const Series& f);

// *-inverse g with f * g = g * f = 1 + O(q^{n_max+1}), via the recursion
// g_0 = a_0^{-1}, g_n = -a_0^{-1} sum_{k=1..n} a_k g_{n-k}. Requires
// |a_0| > 1e-12 (NotInvertible otherwise). The radius of the result is the
// operand's radius and is nominal: the true domain excludes the zero set of
// the symmetrization, which this container does not track.
Series star_reciprocal(const Series& f, std::size_t n_max);

// Coefficient shift (Tf)_n = a_{n+1}; the series satisfies
// f = f(0) + q * (Tf). Radius unchanged.
Series shift(const Series& f);

// Series of absolute coefficients sum_n q^n |a_n| (real coefficients).
Series abs_series(const Series& f);

// Termwise slice derivative: (f')_n = (n+1) a_{n+1}.
Series derivative(const Series& f);

// Max over indices of |a_n - b_n|; convenience for tests and checks.
double coeff_distance(const Series& f, const Series& g);

// True when every coefficient is real within cfg::coeff_tol.
bool has_real_coeffs(const Series& f);

// If every coefficient lies in a single slice C_I within cfg::coeff_tol,
// returns that I (the slice of the first non-real coefficient; i when all
// coefficients are real, since real series preserve every slice). Returns
// nullopt otherwise.
std::optional<ImaginaryUnit> common_slice(const Series& f);

// Power series over a fixed slice C_I, identified with C via 1 <-> 1 and
// I <-> i. Plain commutative arithmetic.
struct ComplexSeries {
  std::vector<std::complex<double>> coeffs{{0.0, 0.0}};
  double radius = kInfRadius;

  std::size_t degree() const { return coeffs.size() - 1; }
  std::complex<double> coeff(std::size_t n) const {
    return n < coeffs.size() ? coeffs[n] : std::complex<double>{};
  }
  std::complex<double> evaluate(const std::complex<double>& z) const;
};

ComplexSeries mul_trunc(const ComplexSeries& a, const ComplexSeries& b, std::size_t n_max);

// Classical composition (outer o inner) truncated to n_max, by Horner over
// the outer coefficients. The inner constant term need not vanish; kept
// coefficients only depend on kept input coefficients, so truncation at
// every step is exact for the polynomial data.
ComplexSeries compose_classical(const ComplexSeries& outer, const ComplexSeries& inner,
                                std::size_t n_max);

// Splitting of f on the slice C_I with orthogonal J: f_I = F + G * J, where
// F and G have coefficients in C_I. Projections onto the orthonormal real
// basis {1, I, J, IJ} of the quaternions.
struct SliceSplit {
  ComplexSeries F;
  ComplexSeries G;
  Quaternion I;
  Quaternion J;
};

// Requires J orthogonal to I within cfg::unit_tol.
SliceSplit split(const Series& f, const ImaginaryUnit& I, const ImaginaryUnit& J);

// Chooses J canonically by Gram-Schmidt against the probe order j, k, i
// (first probe far enough from I wins).
SliceSplit split(const Series& f, const ImaginaryUnit& I);

// Inverse of split: coefficients (F_n as C_I) + (G_n as C_I) * J.
Series extend(const ComplexSeries& F, const ComplexSeries& G, const ImaginaryUnit& I,
              const ImaginaryUnit& J);

// Projects a series whose coefficients all lie in C_I (within cfg::coeff_tol)
// onto its complex restriction; throws NotSlicePreserving otherwise.
ComplexSeries slice_restrict(const Series& f, const ImaginaryUnit& I);

// Lifts a complex series back into the slice C_I.
Series slice_embed(const ComplexSeries& F, const ImaginaryUnit& I);

// Value of the representation formula at x + y*K from the two slice values
// f(x + y*I), f(x - y*I):
//   1/2 (f(x+yI) + f(x-yI)) + 1/2 (K I) (f(x-yI) - f(x+yI)).
Quaternion representation_value(const Quaternion& value_plus, const Quaternion& value_minus,
                                const ImaginaryUnit& I, const ImaginaryUnit& K);

}  // namespace sliceop
