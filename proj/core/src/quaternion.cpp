#include "sliceop/quaternion.hpp"

#include <cmath>

#include "sliceop/rng.hpp"

namespace sliceop {

SliceCoords decompose(const Quaternion& q) {
  SliceCoords c;
  c.x = q.w;
  const Quaternion v = im(q);
  c.y = abs(v);
  if (c.y > cfg::unit_tol) {
    c.direction = ImaginaryUnit(v / c.y);
  } else {
    c.y = 0.0;
  }
  return c;
}

Quaternion recompose(const SliceCoords& c) {
  const Quaternion dir = c.direction ? c.direction->u : Quaternion::i();
  return Quaternion{c.x} + c.y * dir;
}

std::vector<ImaginaryUnit> sample_sphere(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sample_sphere: n must be at least 1");

  const double s3 = 1.0 / std::sqrt(3.0);
  const Quaternion pinned[4] = {
      Quaternion::i(), Quaternion::j(), Quaternion::k(), {0.0, s3, s3, s3}};

  std::vector<ImaginaryUnit> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n && t < 4; ++t) out.emplace_back(pinned[t]);

  Rng rng(seed);
  while (out.size() < n) {
    const double a = rng.normal();
    const double b = rng.normal();
    const double c = rng.normal();
    const double len = std::sqrt(a * a + b * b + c * c);
    if (len < 1e-12) continue;  // degenerate draw, try again
    out.emplace_back(Quaternion{0.0, a / len, b / len, c / len});
  }
  return out;
}

}  // namespace sliceop
