#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

#include "qherglotz/embedding.hpp"
#include "qherglotz/matrix.hpp"
#include "qherglotz/measures.hpp"
#include "qherglotz/quaternion.hpp"
#include "qherglotz/random.hpp"

namespace testing {

using qherglotz::CMatrix;
using qherglotz::QMatrix;
using qherglotz::Quaternion;

inline double qdiff(const Quaternion& a, const Quaternion& b) { return (a - b).abs(); }

inline QMatrix scalar(const Quaternion& q) { return QMatrix{{q}}; }

// Component-wise quaternion product written out from the multiplication
// table, kept separate from the library operator.
inline Quaternion table_product(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

// Eigenvalues of chi(A) from Eigen's Hermitian solver, ascending.
inline std::vector<double> eigen_chi_eigenvalues(const QMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(qherglotz::chi_embed(a)),
                                                         Eigen::EigenvaluesOnly);
  const auto& v = solver.eigenvalues();
  return std::vector<double>(v.data(), v.data() + v.size());
}

inline double eigen_min_eigenvalue(const QMatrix& a) { return eigen_chi_eigenvalues(a).front(); }

}  // namespace testing

namespace testing {

// Smallest circular distance between support points of a and of b,
// reflection partners included.
inline double support_gap(const qherglotz::DiscreteQPositiveMeasure& a, const qherglotz::DiscreteQPositiveMeasure& b) {
  double gap = 10.0;
  for (const auto& x : qherglotz::mu_blocks(a))
    for (const auto& y : qherglotz::mu_blocks(b)) gap = std::min(gap, qherglotz::angle_distance(x.t, y.t));
  return gap;
}

// nu_- with card_supp = kappa (rank-one pairs) and a full-rank nu_+ with up
// to `plus_pairs` pairs, all support points at least `sep` apart.
inline qherglotz::MixedMeasurePair random_mixed_pair(qherglotz::Rng& rng, std::size_t s, std::size_t kappa,
                                                    std::size_t plus_pairs, double sep) {
  qherglotz::MeasureShape minus_shape;
  minus_shape.s = s;
  minus_shape.pairs = kappa;
  minus_shape.rank = 1;
  minus_shape.min_separation = sep;
  qherglotz::MeasureShape plus_shape;
  plus_shape.s = s;
  plus_shape.pairs = plus_pairs;
  plus_shape.min_separation = sep;
  for (;;) {
    qherglotz::MixedMeasurePair pair{qherglotz::random_q_positive_measure(rng, plus_shape),
                                     qherglotz::random_q_positive_measure(rng, minus_shape)};
    if (support_gap(pair.plus, pair.minus) >= sep) return pair;
  }
}

}  // namespace testing
