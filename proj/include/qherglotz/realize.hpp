#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qherglotz/matrix.hpp"
#include "qherglotz/moments.hpp"
#include "qherglotz/random.hpp"

namespace qherglotz {

/// Diagonal Gram matrix diag(+-1) of a finite-dimensional Pontryagin space.
class SignatureGram {
 public:
  // Throws ShapeError unless every entry is +1 or -1.
  explicit SignatureGram(std::vector<int> signs);
  static SignatureGram hilbert(std::size_t d) { return SignatureGram(std::vector<int>(d, 1)); }
  // diag(I_positive, -I_negative)
  static SignatureGram split(std::size_t positive, std::size_t negative);

  std::size_t dimension() const { return signs_.size(); }
  std::size_t kappa() const;
  const std::vector<int>& signs() const { return signs_; }
  QMatrix matrix() const;

  // J * m and m * J without forming J.
  QMatrix left(const QMatrix& m) const;
  QMatrix right(const QMatrix& m) const;

 private:
  std::vector<int> signs_;
};

/// r(n) = C^* J U^n C with U unitary for the indefinite form [a, b] = b^* J a.
struct PontryaginRealization {
  SignatureGram J;
  QMatrix U;
  QMatrix C;
};

inline constexpr double kJUnitaryTol = 1e-10;

// max |U^* J U - J|, and the scale it is judged against (max(1, max|U|^2)).
double j_unitarity_defect(const SignatureGram& J, const QMatrix& U);
double j_unitarity_scale(const QMatrix& U);

// Shapes consistent and U^* J U = J within 1e-10 * scale. Throws ShapeError
// or NotJUnitary.
void require_valid(const PontryaginRealization& R);

/// adjoint(C) J U^n C; negative n use U^{-1} = J U^* J.
QMatrix moment(const PontryaginRealization& R, long n);

// r(0), ..., r(n_max).
HermitianSequence moment_sequence(const PontryaginRealization& R, std::size_t n_max);

struct NegativeSquaresBound {
  std::size_t kappa_seq = 0;
  bool ok = false;  // kappa_seq <= J.kappa()
  NegativeSquares profile;
};

NegativeSquaresBound verify_negative_squares_bound(const PontryaginRealization& R, std::size_t n_max);

/// U = [[V^*, I - V^* V], [0, V]] for a square coisometry V (V V^* = I within
/// 1e-10 * scale). Throws ShapeError for rectangular V and NotCoisometry.
QMatrix dilate_coisometry(const QMatrix& V);

// (I - S)^{-1} (I + S); throws SingularMatrix when I - S is singular.
QMatrix cayley_transform(const QMatrix& S);

/// Cayley transform of S = J K with K random skew-Hermitian, which makes S
/// J-skew (S^* J + J S = 0) and the result J-unitary. Throws DegenerateSeed
/// after 100 singular draws.
QMatrix random_j_unitary(const SignatureGram& J, Rng& rng);
QMatrix random_j_unitary(const SignatureGram& J, std::uint64_t seed);

inline constexpr double kSpanRankTol = 1e-8;
inline constexpr double kAlignResidualTol = 1e-7;
inline constexpr double kAlignIsometryTol = 1e-6;

/// S with S U1^n C1 = U2^n C2 for every n in n_range, fitted by least squares
/// through the complex embedding. Throws SpanDeficient when either family
/// U^n C fails to span its space (singular values below 1e-8 * largest) and
/// NoUnitaryAlignment when the fit residual, S^* J2 S = J1 or S U1 = U2 S fails.
QMatrix align_realizations(const PontryaginRealization& R1, const PontryaginRealization& R2,
                           const std::vector<long>& n_range);

}  // namespace qherglotz
