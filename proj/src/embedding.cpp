#include "qherglotz/embedding.hpp"

#include <sstream>

namespace qherglotz {

ComplexParts complex_parts(const QMatrix& p) {
  ComplexParts parts{CMatrix(p.rows(), p.cols()), CMatrix(p.rows(), p.cols())};
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const Quaternion& q = p(r, c);
      parts.p1(r, c) = {q.w, q.x};
      parts.p2(r, c) = {q.y, q.z};
    }
  }
  return parts;
}

QMatrix from_complex_parts(const CMatrix& p1, const CMatrix& p2) {
  if (p1.rows() != p2.rows() || p1.cols() != p2.cols()) {
    throw ShapeError("from_complex_parts: shapes differ");
  }
  QMatrix p(p1.rows(), p1.cols());
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      p(r, c) = {p1(r, c).real(), p1(r, c).imag(), p2(r, c).real(), p2(r, c).imag()};
    }
  }
  return p;
}

CMatrix chi_embed(const QMatrix& p) {
  const std::size_t s = p.rows();
  const std::size_t t = p.cols();
  CMatrix m(2 * s, 2 * t);
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < t; ++c) {
      const Quaternion& q = p(r, c);
      const Complex a{q.w, q.x};
      const Complex b{q.y, q.z};
      m(r, c) = a;
      m(r, t + c) = b;
      m(s + r, c) = -std::conj(b);
      m(s + r, t + c) = std::conj(a);
    }
  }
  return m;
}

double chi_symmetry_defect(const CMatrix& m) {
  if (m.rows() % 2 != 0 || m.cols() % 2 != 0) {
    throw ShapeError("chi: complex matrix dimensions must be even");
  }
  const std::size_t s = m.rows() / 2;
  const std::size_t t = m.cols() / 2;
  double defect = 0.0;
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < t; ++c) {
      defect = std::max(defect, std::abs(m(s + r, t + c) - std::conj(m(r, c))));
      defect = std::max(defect, std::abs(m(s + r, c) + std::conj(m(r, t + c))));
    }
  }
  return defect;
}

QMatrix chi_inverse(const CMatrix& m, double rel_tol) {
  const double defect = chi_symmetry_defect(m);
  const double limit = rel_tol * scale_of(m);
  if (defect > limit) {
    std::ostringstream msg;
    msg << "chi_inverse: block symmetry defect " << defect << " exceeds " << limit;
    throw SymmetryViolation(msg.str());
  }
  const std::size_t s = m.rows() / 2;
  const std::size_t t = m.cols() / 2;
  QMatrix p(s, t);
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < t; ++c) {
      const Complex a = 0.5 * (m(r, c) + std::conj(m(s + r, t + c)));
      const Complex b = 0.5 * (m(r, t + c) - std::conj(m(s + r, c)));
      p(r, c) = {a.real(), a.imag(), b.real(), b.imag()};
    }
  }
  return p;
}

}  // namespace qherglotz
