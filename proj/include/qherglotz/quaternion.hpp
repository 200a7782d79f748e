#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

namespace qherglotz {

/// Real quaternion q = w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  // Embeds a complex number a + b i (complex parts are always taken along i).
  static constexpr Quaternion from_complex(std::complex<double> c) {
    return {c.real(), c.imag(), 0.0, 0.0};
  }

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double abs() const { return std::sqrt(norm2()); }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
inline double abs(const Quaternion& q) { return q.abs(); }

inline Quaternion inverse(const Quaternion& q) { return conj(q) / q.norm2(); }

// Euclidean inner product of the imaginary parts, viewed as vectors of R^3.
constexpr double imag_dot(const Quaternion& a, const Quaternion& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Purely imaginary unit quaternion (an element of the sphere S); I*I = -1.
class ImaginaryUnit {
 public:
  // Normalizes the imaginary direction (x, y, z). Throws FrameError for a
  // (numerically) zero direction.
  static ImaginaryUnit normalized(double x, double y, double z);

  // Accepts q only if Re(q) = 0 and |q| = 1 within `tol`; the stored value is
  // renormalized.
  static ImaginaryUnit from_quaternion(const Quaternion& q, double tol = 1e-12);

  static ImaginaryUnit i() { return ImaginaryUnit{Quaternion::i()}; }
  static ImaginaryUnit j() { return ImaginaryUnit{Quaternion::j()}; }
  static ImaginaryUnit k() { return ImaginaryUnit{Quaternion::k()}; }

  const Quaternion& value() const { return q_; }
  operator const Quaternion&() const { return q_; }  // NOLINT(google-explicit-constructor)

  // Lifts a point of the complex plane C_I: a + b I.
  Quaternion lift(std::complex<double> c) const { return Quaternion{c.real()} + q_ * c.imag(); }

 private:
  explicit ImaginaryUnit(const Quaternion& q) : q_(q) {}
  Quaternion q_;
};

struct Frame {
  ImaginaryUnit J;
  ImaginaryUnit K;
};

// Completes I to an orthonormal frame (I, J, K = I J). J is the normalized
// part orthogonal to I of whichever of j, k, i is most orthogonal to I
// (ties resolved in that order), so the result is deterministic.
Frame frame_complete(const ImaginaryUnit& I);

// Coefficients of a = alpha + beta J with alpha, beta in C_I, expressed as
// complex numbers whose imaginary unit is I.
struct SplitCoefficient {
  std::complex<double> alpha;
  std::complex<double> beta;
};

SplitCoefficient split_coefficient(const Quaternion& a, const ImaginaryUnit& I,
                                   const ImaginaryUnit& J);

// exp(I t) = cos t + I sin t.
inline Quaternion exp_unit(const ImaginaryUnit& I, double t) {
  return I.lift({std::cos(t), std::sin(t)});
}

// Integer power by repeated squaring (p^0 = 1).
Quaternion pow(const Quaternion& p, unsigned n);

}  // namespace qherglotz
