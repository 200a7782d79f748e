#include "qherglotz/random.hpp"

#include <numbers>

#include "qherglotz/embedding.hpp"
#include "qherglotz/qlinalg.hpp"

namespace qherglotz {

Quaternion random_quaternion(Rng& rng) {
  const double w = rng.normal();
  const double x = rng.normal();
  const double y = rng.normal();
  const double z = rng.normal();
  return {w, x, y, z};
}

Complex random_complex(Rng& rng) {
  const double re = rng.normal();
  return {re, rng.normal()};
}

QMatrix random_qmatrix(Rng& rng, std::size_t rows, std::size_t cols) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_quaternion(rng);
  return m;
}

CMatrix random_cmatrix(Rng& rng, std::size_t rows, std::size_t cols) {
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_complex(rng);
  return m;
}

ImaginaryUnit random_imaginary_unit(Rng& rng) {
  for (;;) {
    const double x = rng.normal();
    const double y = rng.normal();
    const double z = rng.normal();
    if (x * x + y * y + z * z > 1e-6) return ImaginaryUnit::normalized(x, y, z);
  }
}

QMatrix random_hermitian(Rng& rng, std::size_t n) { return hermitian_part(random_qmatrix(rng, n, n)); }

QMatrix random_psd(Rng& rng, std::size_t n, std::size_t rank) {
  const QMatrix b = random_qmatrix(rng, n, rank);
  return hermitian_part(b * adjoint(b));
}

CMatrix random_complex_psd(Rng& rng, std::size_t n, std::size_t rank) {
  const CMatrix b = random_cmatrix(rng, n, rank);
  return hermitian_part(b * adjoint(b));
}

QMatrix random_unitary(Rng& rng, std::size_t n) {
  const QMatrix g = random_qmatrix(rng, n, n);
  const QMatrix skew = 0.5 * (g - adjoint(g));
  const QMatrix id = QMatrix::identity(n);
  return inverse(QMatrix(id - skew)) * (id + skew);
}

namespace {

constexpr double kPi = std::numbers::pi;

bool far_enough(const DiscreteQPositiveMeasure& nu, double t, double sep) {
  for (const auto& a : nu.atoms) {
    if (angle_distance(a.t, t) < sep || angle_distance(a.t, partner_angle(t)) < sep) return false;
  }
  return true;
}

}  // namespace

DiscreteQPositiveMeasure random_q_positive_measure(Rng& rng, const MeasureShape& shape) {
  const std::size_t s = shape.s;
  const std::size_t rank = shape.rank == 0 ? s : shape.rank;
  const double sep = std::max(shape.min_separation, 10 * kAtomSpacing);
  DiscreteQPositiveMeasure nu;
  nu.s = s;

  for (std::size_t p = 0; p < shape.pairs; ++p) {
    bool placed = false;
    if (rng.uniform() < shape.self_paired_fraction) {
      const double t = rng.uniform() < 0.5 ? 0.0 : kPi;
      if (far_enough(nu, t, sep)) {
        const QMatrix q = shape.weight * random_psd(rng, s, rank);
        const auto parts = complex_parts(q);
        nu.atoms.push_back({t, parts.p1, parts.p2});
        placed = true;
      }
    }
    for (int attempt = 0; !placed && attempt < 1000; ++attempt) {
      const double t = rng.uniform(sep, kPi - sep);
      if (!far_enough(nu, t, sep)) continue;
      // Rank r blocks at t and at its partner: r towards card_supp.
      const CMatrix m = shape.weight * random_complex_psd(rng, 2 * s, rank);
      const CMatrix m11 = m.block(0, 0, s, s);
      const CMatrix m12 = m.block(0, s, s, s);
      const CMatrix m22 = m.block(s, s, s, s);
      nu.atoms.push_back({t, m11, m12});
      nu.atoms.push_back({partner_angle(t), entrywise_conj(m22), -transpose(m12)});
      placed = true;
    }
    if (!placed) throw DegenerateSeed("random_q_positive_measure: could not place separated atoms");
  }
  return nu;
}

}  // namespace qherglotz
