#include "qherglotz/quaternion.hpp"

#include <array>
#include <ostream>

#include "qherglotz/errors.hpp"

namespace qherglotz {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

ImaginaryUnit ImaginaryUnit::normalized(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw FrameError("imaginary unit: direction has zero length");
  }
  return ImaginaryUnit{Quaternion{0.0, x / n, y / n, z / n}};
}

ImaginaryUnit ImaginaryUnit::from_quaternion(const Quaternion& q, double tol) {
  if (std::abs(q.w) > tol || std::abs(q.abs() - 1.0) > tol) {
    throw FrameError("imaginary unit: expected a purely imaginary quaternion of modulus 1");
  }
  return normalized(q.x, q.y, q.z);
}

Frame frame_complete(const ImaginaryUnit& I) {
  const std::array<Quaternion, 3> candidates{Quaternion::j(), Quaternion::k(), Quaternion::i()};
  const Quaternion& u = I.value();
  std::size_t best = 0;
  double best_dot = std::abs(imag_dot(candidates[0], u));
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    const double d = std::abs(imag_dot(candidates[c], u));
    if (d < best_dot) {
      best = c;
      best_dot = d;
    }
  }
  const Quaternion e = candidates[best];
  const Quaternion v = e - u * imag_dot(e, u);
  ImaginaryUnit J = ImaginaryUnit::normalized(v.x, v.y, v.z);
  const Quaternion k = u * J.value();
  ImaginaryUnit K = ImaginaryUnit::normalized(k.x, k.y, k.z);
  return {J, K};
}

SplitCoefficient split_coefficient(const Quaternion& a, const ImaginaryUnit& I,
                                   const ImaginaryUnit& J) {
  constexpr double tol = 1e-12;
  if (std::abs(imag_dot(I.value(), J.value())) > tol) {
    throw FrameError("split_coefficient: I and J are not orthogonal");
  }
  const Quaternion K = I.value() * J.value();
  const double a1 = imag_dot(a, I.value());
  const double a2 = imag_dot(a, J.value());
  const double a3 = imag_dot(a, K);
  return {{a.w, a1}, {a2, a3}};
}

Quaternion pow(const Quaternion& p, unsigned n) {
  Quaternion result{1.0};
  Quaternion base = p;
  while (n > 0) {
    if (n & 1U) result = result * base;
    base = base * base;
    n >>= 1U;
  }
  return result;
}

}  // namespace qherglotz
