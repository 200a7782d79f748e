#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qherglotz/matrix.hpp"

namespace qherglotz {

/// Eigendecomposition A = V diag(values) V^* of a complex Hermitian matrix.
/// Values are ascending; column c of `vectors` belongs to values[c].
struct HermitianEigen {
  std::vector<double> values;
  CMatrix vectors;
};

struct JacobiOptions {
  double off_tol = 1e-13;  // off-diagonal Frobenius norm, relative to scale
  int max_sweeps = 100;
  bool want_vectors = true;
};

// Cyclic Jacobi on a complex Hermitian matrix. The input is symmetrized
// first; the caller is responsible for checking it was Hermitian. Throws
// NoConvergence if the off-diagonal mass does not fall below tolerance.
HermitianEigen jacobi_eigh(const CMatrix& a, const JacobiOptions& opts = {});

/// Eigenvalue counts of a Hermitian quaternionic matrix, in quaternionic
/// units: every eigenvalue of chi(A) appears twice and is reported once.
struct Inertia {
  std::size_t neg = 0;
  std::size_t zero = 0;
  std::size_t pos = 0;
  std::vector<double> eigenvalues;  // ascending, one per quaternionic eigenvalue

  double min() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  double max() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kZeroEigTol = 1e-10;

// Throws NotHermitian unless |A - A^*| <= tol * scale(A) entrywise.
void require_hermitian(const QMatrix& a, double tol = kHermitianTol);

// Eigenvalues of chi(A) with paired entries averaged; size 2n, ascending.
std::vector<double> paired_chi_eigenvalues(const QMatrix& a);

/// Inertia of a Hermitian quaternionic matrix; eigenvalues with
/// |lambda| <= zero_tol * scale(A) count as zero.
Inertia hermitian_eigen(const QMatrix& a, double zero_tol = kZeroEigTol);

double min_eigenvalue(const QMatrix& hermitian);

// f(A) = V f(D) V^* for Hermitian A, evaluated through chi. The two copies of
// every eigenvalue are averaged before f is applied, so the result stays in
// the image of chi even for discontinuous f.
QMatrix spectral_function(const QMatrix& a, const std::function<double(double)>& f);

/// Unique Hermitian PSD square root. Negative eigenvalues down to
/// -1e-10 * scale are clamped; anything lower throws NotPSD.
QMatrix psd_sqrt(const QMatrix& a);

/// Moore-Penrose inverse of a PSD matrix; eigenvalues <= 1e-10 * lambda_max
/// are treated as zero.
QMatrix pinv_psd(const QMatrix& a);

// pinv(A^{1/2}) with the numerical range of A decided by the same
// 1e-10 * lambda_max rule as pinv_psd.
QMatrix pinv_psd_sqrt(const QMatrix& a);

/// Spectral (operator 2-) norm, computed as the largest singular value of chi(G).
double operator_norm(const QMatrix& g);

// Assembles [[A, B], [B^*, C]].
QMatrix block2x2(const QMatrix& a, const QMatrix& b, const QMatrix& c);

/// Contraction G with B = A^{1/2} G C^{1/2}, taken as
/// pinv(A^{1/2}) B pinv(C^{1/2}) so that G vanishes off the numerical ranges.
/// Throws NotPSD when A or C is not PSD and BlockNotPSD when
/// [[A, B], [B^*, C]] has an eigenvalue below -1e-8 * scale.
QMatrix extract_contraction(const QMatrix& a, const QMatrix& b, const QMatrix& c);

/// PSD completion of the partially specified block matrix
///   [[A, B, ?], [B^*, C, D], [?, D^*, E]]
/// with (1,3) entry A^{1/2} G1 G2 E^{1/2}.
QMatrix psd_complete_3x3(const QMatrix& a, const QMatrix& b, const QMatrix& c, const QMatrix& d,
                         const QMatrix& e);

// Assembles the full 3x3 block matrix for a completion X.
QMatrix block3x3(const QMatrix& a, const QMatrix& b, const QMatrix& x, const QMatrix& c,
                 const QMatrix& d, const QMatrix& e);

// Inverse by Gaussian elimination with partial pivoting. Throws
// SingularMatrix when a pivot falls below 1e-14 * scale.
CMatrix inverse(const CMatrix& a);
QMatrix inverse(const QMatrix& a);

}  // namespace qherglotz
