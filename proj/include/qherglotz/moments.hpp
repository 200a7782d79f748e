#pragma once

#include <cstddef>
#include <vector>

#include "qherglotz/matrix.hpp"
#include "qherglotz/qlinalg.hpp"

namespace qherglotz {

/// Finitely supported Hermitian sequence n -> r(n) in H^{s x s} on
/// {-N, ..., N}. Only r(0), ..., r(N) are stored; r(-n) = r(n)^*.
class HermitianSequence {
 public:
  // values[n] = r(n) for n = 0..N. Every block must be s x s and r(0) must be
  // Hermitian within 1e-12 * scale (it is symmetrized on construction).
  explicit HermitianSequence(std::vector<QMatrix> values);

  static HermitianSequence scalar(const std::vector<double>& values);

  std::size_t block_size() const { return s_; }
  std::size_t support() const { return values_.size() - 1; }

  // r(n) for |n| <= N; throws SupportExceeded otherwise.
  QMatrix at(long n) const;

  const std::vector<QMatrix>& nonnegative() const { return values_; }

  // Restriction to {-M, ..., M}.
  HermitianSequence truncated(std::size_t m) const;

 private:
  std::size_t s_;
  std::vector<QMatrix> values_;
};

/// Block Toeplitz matrix T_N with (j, l) block r(l - j); first block row is
/// r(0), r(1), ..., r(N). Throws SupportExceeded if N > seq.support().
QMatrix build_toeplitz(const HermitianSequence& seq, std::size_t n);

struct PdVerdict {
  bool ok = false;
  double min_eig = 0.0;
};

inline constexpr double kPdTol = 1e-9;

/// T_N is PSD up to -tol * scale.
PdVerdict is_positive_definite(const HermitianSequence& seq, std::size_t n, double tol = kPdTol);

struct NegativeSquares {
  std::size_t kappa = 0;
  std::vector<std::size_t> profile;  // profile[N] = #negative eigenvalues of T_N
  bool stabilized = false;           // last three profile entries agree
};

/// Negative-eigenvalue counts of T_0, ..., T_{N_max}. Since the definition
/// quantifies over every N, kappa is only a lower bound for the true index.
NegativeSquares negative_squares(const HermitianSequence& seq, std::size_t n_max);

inline constexpr double kExtensionTol = 1e-7;

/// Carathéodory extension: appends r(N+1), ..., r(N+M) one at a time, each as
/// the central PSD completion of T_{N+k} partitioned as
///   [[r(0), row(r(1..N)), ?], [*, T_{N-1}, col(r(N..1))], [?, *, r(0)]].
/// Throws NotPD if T_N fails is_positive_definite and CompletionFailure if an
/// extended Toeplitz matrix drops below -1e-7 * scale.
HermitianSequence caratheodory_extend(const HermitianSequence& seq, std::size_t steps);

}  // namespace qherglotz
