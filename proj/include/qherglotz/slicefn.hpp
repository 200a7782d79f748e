#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "qherglotz/matrix.hpp"
#include "qherglotz/moments.hpp"
#include "qherglotz/qlinalg.hpp"
#include "qherglotz/quaternion.hpp"

namespace qherglotz {

/// Left power series sum_n p^n a_n with quaternionic matrix coefficients.
struct SlicePowerSeries {
  std::vector<QMatrix> coeffs;  // a_0, ..., a_M, all s x s
  double radius = 1.0;
  // Bound on ||a_n|| for n > M; 0 means max ||a_n|| over the stored terms.
  double coeff_bound = 0.0;
};

struct SeriesValue {
  QMatrix value;
  double tail = 0.0;  // bound on the omitted terms, B |p|^{M+1} / (1 - |p|)
};

/// Horner evaluation a_0 + p (a_1 + p (a_2 + ...)). Throws OutOfDomain when
/// |p| >= radius; the tail is reported as infinite for |p| >= 1.
SeriesValue eval_series(const SlicePowerSeries& f, const Quaternion& p);

/// (f_+ + f_-)/2 + I (J (f_- - f_+))/2 where f_+- = f(x +- J y); this is
/// f(x + I y) for slice regular f.
QMatrix representation_formula(const QMatrix& f_plus, const QMatrix& f_minus, const ImaginaryUnit& I,
                               const ImaginaryUnit& J);
Quaternion representation_formula(const Quaternion& f_plus, const Quaternion& f_minus, const ImaginaryUnit& I,
                                  const ImaginaryUnit& J);

/// (e^{It} + z) / (e^{It} - z) with z = x + y I written as a complex number.
/// Throws OutOfDomain unless |z| < 1.
std::complex<double> herglotz_kernel_slice(std::complex<double> z, double t);

struct GlobalKernelValue {
  Quaternion closed_form;
  Quaternion representation_form;
  double discrepancy = 0.0;  // |closed_form - representation_form|
};

/// Slice regular extension of Lambda_I(., t) to |q| < 1, by two routes:
///   (1 + q^2 - 2 q cos t)^{-1} (1 - 2 q I sin t - q^2)
/// and the representation formula applied to Lambda_I(z, t), Lambda_I(conj z, t)
/// with z = Re q + |Im q| I (I_q term dropped for real q).
GlobalKernelValue herglotz_kernel_global(const Quaternion& q, double t, const ImaginaryUnit& I);

struct SliceAtom {
  double t = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
};

/// Discrete measure mu_J = mu1 + mu2 J on the circle, with the constants
/// Im F(0), Im G(0) of the representation f_I = F + G J.
struct SliceMeasure {
  ImaginaryUnit I = ImaginaryUnit::i();
  ImaginaryUnit J = ImaginaryUnit::j();
  double imag0F = 0.0;
  double imag0G = 0.0;
  std::vector<SliceAtom> atoms;
};

// Throws FrameError unless I and J are orthogonal, NotQPositive if some mu1 < 0.
void validate(const SliceMeasure& m);

/// I (imag0F + imag0G J) + sum Lambda_I(z, t) (mu1 + mu2 J), with z = x + y I.
Quaternion synthesize_slice(const SliceMeasure& m, std::complex<double> z);

/// a_n = 2 sum e^{-I n t} (mu1 + mu2 J) for n >= 1; OutOfDomain otherwise.
Quaternion coefficient_from_measure(const SliceMeasure& m, long n);

// sum |mu1 + mu2 J|.
double slice_mass(const SliceMeasure& m);

inline constexpr double kCertificateTol = 1e-10;

/// phi(p) = r(0) + 2 sum_{n>=1} p^n r(n), known through the stored moments.
class CaratheodoryFunction {
 public:
  // bound: sup ||r(n)|| beyond the stored range (for instance the total mass
  // of a generating measure); defaults to the largest stored ||r(n)||.
  explicit CaratheodoryFunction(HermitianSequence r, std::optional<double> bound = std::nullopt);

  const HermitianSequence& sequence() const { return r_; }
  double coeff_bound() const { return bound_; }
  std::size_t block_size() const { return r_.block_size(); }

  SlicePowerSeries series() const;

 private:
  HermitianSequence r_;
  double bound_;
};

/// phi(p) truncated after min(M, N) terms. Throws OutOfDomain unless the tail
/// 2 B |p|^{m+1} / (1 - |p|) is below 1e-10.
SeriesValue phi_from_sequence(const CaratheodoryFunction& phi, const Quaternion& p, std::size_t M);
SeriesValue phi_from_sequence(const HermitianSequence& r, const Quaternion& p, std::size_t M);

/// sum_{n=0}^{M} p^n H conj(q)^n with H = (phi(p) + phi(q)^*) / 2. `tail`
/// bounds the omitted terms of the kernel series.
SeriesValue caratheodory_kernel(const CaratheodoryFunction& phi, const Quaternion& p, const Quaternion& q,
                                std::size_t M);

// ||K - p K conj(q) - (phi(p) + phi(q)^*)/2||_max for the truncated kernel.
double kernel_identity_residual(const CaratheodoryFunction& phi, const Quaternion& p, const Quaternion& q,
                                std::size_t M);

/// Inertia of the block Gram matrix [K(p_a, p_b)].
Inertia kernel_negative_squares(const CaratheodoryFunction& phi, const std::vector<Quaternion>& points,
                                std::size_t M);

}  // namespace qherglotz
