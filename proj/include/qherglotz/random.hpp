#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "qherglotz/matrix.hpp"
#include "qherglotz/measures.hpp"
#include "qherglotz/quaternion.hpp"

namespace qherglotz {

/// Seeded source for every randomized routine in the library; the same seed
/// always reproduces the same draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Gaussian entries.
Quaternion random_quaternion(Rng& rng);
Complex random_complex(Rng& rng);
QMatrix random_qmatrix(Rng& rng, std::size_t rows, std::size_t cols);
CMatrix random_cmatrix(Rng& rng, std::size_t rows, std::size_t cols);

ImaginaryUnit random_imaginary_unit(Rng& rng);

QMatrix random_hermitian(Rng& rng, std::size_t n);

// B B^* with B of size n x rank.
QMatrix random_psd(Rng& rng, std::size_t n, std::size_t rank);
CMatrix random_complex_psd(Rng& rng, std::size_t n, std::size_t rank);

// Cayley transform of a random skew-Hermitian matrix.
QMatrix random_unitary(Rng& rng, std::size_t n);

struct MeasureShape {
  std::size_t s = 1;
  std::size_t pairs = 1;           // reflection pairs (a self-paired point counts as one)
  std::size_t rank = 0;            // quaternionic rank per pair; 0 means full
  double self_paired_fraction = 0.25;  // chance a pair sits at t = 0 or t = pi
  double min_separation = 0.0;     // between distinct support points, partners included
  double weight = 1.0;
};

/// A q-positive measure with card_supp = pairs * rank (for distinct points).
/// Points at t in {0, pi} carry chi(Q) for a quaternionic PSD Q; any other
/// point t carries the top row of a complex PSD 2s x 2s block M, and its
/// partner 2 pi - t gets nu1 = conj(M22), nu2 = -M12^T.
DiscreteQPositiveMeasure random_q_positive_measure(Rng& rng, const MeasureShape& shape);

}  // namespace qherglotz
