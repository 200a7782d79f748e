#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qherglotz/matrix.hpp"
#include "qherglotz/moments.hpp"

namespace qherglotz {

/// Point mass nu1 + nu2 j at angle t in [0, 2 pi).
struct MeasureAtom {
  double t = 0.0;
  CMatrix nu1;
  CMatrix nu2;
};

/// Finitely supported H^{s x s}-valued measure nu = nu1 + nu2 j on [0, 2 pi).
/// Atoms whose reflection partner t' = (2 pi - t) mod 2 pi is not listed get
/// an implicit zero-weight partner. q-positivity is checked by
/// validate_q_positive; construction does not enforce it.
struct DiscreteQPositiveMeasure {
  std::size_t s = 1;
  std::vector<MeasureAtom> atoms;
};

/// nu_+ and nu_- for the indefinite synthesis a = int e^{int} d(nu_+ - nu_-).
struct MixedMeasurePair {
  DiscreteQPositiveMeasure plus;
  DiscreteQPositiveMeasure minus;
};

inline constexpr double kAtomSpacing = 1e-9;
inline constexpr double kMeasureTol = 1e-10;

struct MeasureViolation {
  enum class Kind {
    kShape,          // nu1 or nu2 is not s x s
    kAngleRange,     // t outside [0, 2 pi)
    kDuplicateAtom,  // two atoms closer than the spacing tolerance
    kNotHermitian,   // nu1(t) is not Hermitian
    kPairingNotPSD,  // [[nu1(t), nu2(t)], [nu2(t)^*, conj(nu1(t'))]] not PSD
    kAntisymmetry,   // nu2(t) != -nu2(t')^T
  };
  Kind kind;
  double t = 0.0;
  double magnitude = 0.0;  // size of the defect (eigenvalue, residual, ...)
  std::string detail;
};

std::string to_string(MeasureViolation::Kind kind);

/// Empty result means nu is q-positive.
std::vector<MeasureViolation> validate_q_positive(const DiscreteQPositiveMeasure& nu);

// Reflection partner (2 pi - t) mod 2 pi.
double partner_angle(double t);

// Circular distance on [0, 2 pi).
double angle_distance(double a, double b);

/// The paired complex block
///   mu(t) = [[nu1(t), nu2(t)], [nu2(t)^*, conj(nu1(t'))]]
/// at every point of the support of nu and of its reflection.
struct MuBlock {
  double t = 0.0;
  CMatrix block;
};
std::vector<MuBlock> mu_blocks(const DiscreteQPositiveMeasure& nu);

/// r(n) = sum_q e^{i n t_q} (nu1_q + nu2_q j), evaluated as
/// chi^{-1}(sum e^{i n t} mu(t)). Throws NotQPositive.
QMatrix herglotz_synthesize(const DiscreteQPositiveMeasure& nu, long n);

// r(0), ..., r(n_max) as a sequence; validates once.
HermitianSequence synthesize_sequence(const DiscreteQPositiveMeasure& nu, std::size_t n_max);

/// a(n) = herglotz_synthesize(nu_+, n) - herglotz_synthesize(nu_-, n).
/// Throws SupportOverlap when the reflected supports of nu_+ and nu_- meet.
QMatrix synthesize_indefinite(const MixedMeasurePair& pair, long n);
HermitianSequence synthesize_indefinite_sequence(const MixedMeasurePair& pair, std::size_t n_max);

/// Half the summed ranks of the mu blocks (rank threshold 1e-10 * scale).
std::size_t card_supp(const DiscreteQPositiveMeasure& nu);

/// sum_q ||nu1_q + nu2_q j||, a uniform bound for ||r(n)||. Throws NotQPositive.
double total_mass_bound(const DiscreteQPositiveMeasure& nu);

}  // namespace qherglotz
