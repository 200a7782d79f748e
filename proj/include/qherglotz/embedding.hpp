#pragma once

#include "qherglotz/matrix.hpp"

namespace qherglotz {

// Splits P = P1 + P2 j with P1, P2 complex (complex parts along i).
struct ComplexParts {
  CMatrix p1;
  CMatrix p2;
};

ComplexParts complex_parts(const QMatrix& p);
QMatrix from_complex_parts(const CMatrix& p1, const CMatrix& p2);

/// The injective *-homomorphism H^{s x t} -> C^{2s x 2t},
///   chi(P) = [[P1, P2], [-conj(P2), conj(P1)]].
CMatrix chi_embed(const QMatrix& p);

// Largest deviation of M from the image of chi:
//   max(|M22 - conj(M11)|, |M21 + conj(M12)|) entrywise.
double chi_symmetry_defect(const CMatrix& m);

/// Inverse of chi_embed. Throws ShapeError for odd dimensions and
/// SymmetryViolation when the block symmetry fails by more than
/// rel_tol * max(1, max|M|). The two redundant copies of each part are
/// averaged, so an exact image round-trips exactly.
QMatrix chi_inverse(const CMatrix& m, double rel_tol = 1e-10);

}  // namespace qherglotz
