#include "qherglotz/slicefn.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qherglotz {

namespace {

double geometric_tail(double bound, double radius, std::size_t m) {
  if (radius >= 1.0) return std::numeric_limits<double>::infinity();
  return bound * std::pow(radius, static_cast<double>(m + 1)) / (1.0 - radius);
}

QMatrix scale_left(const Quaternion& p, const QMatrix& m) { return p * m; }

}  // namespace

SeriesValue eval_series(const SlicePowerSeries& f, const Quaternion& p) {
  if (f.coeffs.empty()) throw ShapeError("eval_series: no coefficients");
  const double r = p.abs();
  if (!(r < f.radius)) {
    std::ostringstream msg;
    msg << "eval_series: |p| = " << r << " is not below the radius " << f.radius;
    throw OutOfDomain(msg.str());
  }
  QMatrix acc = f.coeffs.back();
  for (std::size_t n = f.coeffs.size() - 1; n-- > 0;) {
    acc = scale_left(p, acc);
    acc += f.coeffs[n];
  }
  double bound = f.coeff_bound;
  if (bound == 0.0)
    for (const auto& a : f.coeffs) bound = std::max(bound, operator_norm(a));
  return {std::move(acc), geometric_tail(bound, r, f.coeffs.size() - 1)};
}

QMatrix representation_formula(const QMatrix& f_plus, const QMatrix& f_minus, const ImaginaryUnit& I,
                               const ImaginaryUnit& J) {
  const QMatrix mean = 0.5 * (f_plus + f_minus);
  const QMatrix diff = 0.5 * (f_minus - f_plus);
  return mean + I.value() * (J.value() * diff);
}

Quaternion representation_formula(const Quaternion& f_plus, const Quaternion& f_minus, const ImaginaryUnit& I,
                                  const ImaginaryUnit& J) {
  return 0.5 * (f_plus + f_minus) + I.value() * (J.value() * (0.5 * (f_minus - f_plus)));
}

std::complex<double> herglotz_kernel_slice(std::complex<double> z, double t) {
  if (!(std::abs(z) < 1.0)) {
    std::ostringstream msg;
    msg << "herglotz_kernel_slice: |z| = " << std::abs(z) << " is not below 1";
    throw OutOfDomain(msg.str());
  }
  const std::complex<double> e = std::polar(1.0, t);
  return (e + z) / (e - z);
}

GlobalKernelValue herglotz_kernel_global(const Quaternion& q, double t, const ImaginaryUnit& I) {
  if (!(q.abs() < 1.0)) {
    std::ostringstream msg;
    msg << "herglotz_kernel_global: |q| = " << q.abs() << " is not below 1";
    throw OutOfDomain(msg.str());
  }
  GlobalKernelValue out;
  const Quaternion q2 = q * q;
  const Quaternion denom = Quaternion{1.0} + q2 - 2.0 * std::cos(t) * q;
  const Quaternion numer = Quaternion{1.0} - 2.0 * std::sin(t) * (q * I.value()) - q2;
  out.closed_form = inverse(denom) * numer;

  const double y = std::hypot(q.x, q.y, q.z);
  const std::complex<double> z{q.w, y};
  const Quaternion lz = I.lift(herglotz_kernel_slice(z, t));
  const Quaternion lzbar = I.lift(herglotz_kernel_slice(std::conj(z), t));
  if (y == 0.0) {
    out.representation_form = 0.5 * (lz + lzbar);
  } else {
    const ImaginaryUnit Iq = ImaginaryUnit::normalized(q.x, q.y, q.z);
    out.representation_form = representation_formula(lz, lzbar, Iq, I);
  }
  out.discrepancy = (out.closed_form - out.representation_form).abs();
  return out;
}

void validate(const SliceMeasure& m) {
  const double dot = imag_dot(m.I.value(), m.J.value());
  if (std::abs(dot) > 1e-12) {
    std::ostringstream msg;
    msg << "slice measure: I and J are not orthogonal (dot " << dot << ")";
    throw FrameError(msg.str());
  }
  for (const auto& a : m.atoms) {
    if (a.mu1 < 0.0) {
      std::ostringstream msg;
      msg << "slice measure: mu1 = " << a.mu1 << " < 0 at t = " << a.t;
      throw NotQPositive(msg.str());
    }
  }
}

Quaternion synthesize_slice(const SliceMeasure& m, std::complex<double> z) {
  const Quaternion& I = m.I.value();
  const Quaternion& J = m.J.value();
  Quaternion f = I * (Quaternion{m.imag0F} + m.imag0G * J);
  for (const auto& a : m.atoms) f += m.I.lift(herglotz_kernel_slice(z, a.t)) * (Quaternion{a.mu1} + a.mu2 * J);
  return f;
}

Quaternion coefficient_from_measure(const SliceMeasure& m, long n) {
  if (n < 1) throw OutOfDomain("coefficient_from_measure: only n >= 1 is defined");
  Quaternion a;
  for (const auto& atom : m.atoms) {
    const Quaternion e = exp_unit(m.I, -static_cast<double>(n) * atom.t);
    a += e * (Quaternion{atom.mu1} + atom.mu2 * m.J.value());
  }
  return 2.0 * a;
}

double slice_mass(const SliceMeasure& m) {
  double total = 0.0;
  for (const auto& a : m.atoms) total += std::hypot(a.mu1, a.mu2);
  return total;
}

namespace {

double largest_norm(const HermitianSequence& r) {
  double b = 0.0;
  for (const auto& v : r.nonnegative()) b = std::max(b, operator_norm(v));
  return b;
}

}  // namespace

CaratheodoryFunction::CaratheodoryFunction(HermitianSequence r, std::optional<double> bound)
    : r_(std::move(r)), bound_(bound.value_or(0.0)) {
  if (!bound) bound_ = largest_norm(r_);
  if (!(bound_ >= 0.0)) throw ShapeError("CaratheodoryFunction: coefficient bound must be nonnegative");
}

SlicePowerSeries CaratheodoryFunction::series() const {
  SlicePowerSeries f;
  const auto& r = r_.nonnegative();
  f.coeffs.reserve(r.size());
  f.coeffs.push_back(r.front());
  for (std::size_t n = 1; n < r.size(); ++n) f.coeffs.push_back(2.0 * r[n]);
  f.radius = 1.0;
  f.coeff_bound = 2.0 * bound_;
  return f;
}

SeriesValue phi_from_sequence(const CaratheodoryFunction& phi, const Quaternion& p, std::size_t M) {
  const double radius = p.abs();
  if (!(radius < 1.0)) {
    std::ostringstream msg;
    msg << "phi: |p| = " << radius << " is outside the unit ball";
    throw OutOfDomain(msg.str());
  }
  const auto& r = phi.sequence().nonnegative();
  const std::size_t m = std::min(M, phi.sequence().support());
  const double tail = geometric_tail(2.0 * phi.coeff_bound(), radius, m);
  if (tail > kCertificateTol) {
    std::ostringstream msg;
    msg << "phi: no convergence certificate at |p| = " << radius << " with " << m << " terms (tail bound " << tail
        << ")";
    throw OutOfDomain(msg.str());
  }
  QMatrix acc = m == 0 ? r.front() : 2.0 * r[m];
  for (std::size_t n = m; n-- > 0;) {
    acc = scale_left(p, acc);
    acc += n == 0 ? r.front() : 2.0 * r[n];
  }
  return {std::move(acc), tail};
}

SeriesValue phi_from_sequence(const HermitianSequence& r, const Quaternion& p, std::size_t M) {
  return phi_from_sequence(CaratheodoryFunction(r), p, M);
}

namespace {

struct KernelParts {
  QMatrix h;
  double phi_tail;
};

KernelParts kernel_center(const CaratheodoryFunction& phi, const Quaternion& p, const Quaternion& q, std::size_t M) {
  const SeriesValue fp = phi_from_sequence(phi, p, M);
  const SeriesValue fq = phi_from_sequence(phi, q, M);
  return {0.5 * (fp.value + adjoint(fq.value)), 0.5 * (fp.tail + fq.tail)};
}

QMatrix kernel_sum(const QMatrix& h, const Quaternion& p, const Quaternion& q, std::size_t M) {
  const Quaternion qbar = conj(q);
  QMatrix term = h;
  QMatrix sum = h;
  for (std::size_t n = 1; n <= M; ++n) {
    term = (p * term) * qbar;
    sum += term;
  }
  return sum;
}

}  // namespace

SeriesValue caratheodory_kernel(const CaratheodoryFunction& phi, const Quaternion& p, const Quaternion& q,
                                std::size_t M) {
  const KernelParts parts = kernel_center(phi, p, q, M);
  const double ratio = p.abs() * q.abs();
  const double tail = (operator_norm(parts.h) * std::pow(ratio, static_cast<double>(M + 1)) + parts.phi_tail) /
                      (1.0 - ratio);
  return {kernel_sum(parts.h, p, q, M), tail};
}

double kernel_identity_residual(const CaratheodoryFunction& phi, const Quaternion& p, const Quaternion& q,
                                std::size_t M) {
  const KernelParts parts = kernel_center(phi, p, q, M);
  const QMatrix k = kernel_sum(parts.h, p, q, M);
  return max_abs(k - (p * k) * conj(q) - parts.h);
}

Inertia kernel_negative_squares(const CaratheodoryFunction& phi, const std::vector<Quaternion>& points,
                                std::size_t M) {
  const std::size_t s = phi.block_size();
  std::vector<QMatrix> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(phi_from_sequence(phi, p, M).value);

  QMatrix gram(points.size() * s, points.size() * s);
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = 0; b < points.size(); ++b) {
      const QMatrix h = 0.5 * (values[a] + adjoint(values[b]));
      gram.set_block(a * s, b * s, kernel_sum(h, points[a], points[b], M));
    }
  }
  return hermitian_eigen(hermitian_part(gram));
}

}  // namespace qherglotz
