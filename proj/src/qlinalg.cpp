#include "qherglotz/qlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qherglotz/embedding.hpp"

namespace qherglotz {

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

bool all_finite(const QMatrix& a) {
  return std::all_of(a.data().begin(), a.data().end(), [](const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
  });
}

// Annihilates a(p,q) with the unitary G that is the identity except for
//   G(p,p) = c, G(p,q) = s e, G(q,p) = -s conj(e), G(q,q) = c,
// where e = a(p,q) / |a(p,q)|; applies A <- G^* A G and V <- V G.
void jacobi_rotate(CMatrix& a, CMatrix* v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex e = apq / mag;
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex se = s * e;
  const Complex se_bar = std::conj(se);
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - se_bar * akq;
    a(k, q) = se * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - se * aqk;
    a(q, k) = se_bar * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex vkp = (*v)(k, p);
      const Complex vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp - se_bar * vkq;
      (*v)(k, q) = se * vkp + c * vkq;
    }
  }
}

std::vector<double> paired_average(std::vector<double> values) {
  for (std::size_t k = 0; k + 1 < values.size(); k += 2) {
    const double m = 0.5 * (values[k] + values[k + 1]);
    values[k] = m;
    values[k + 1] = m;
  }
  return values;
}

QMatrix spectral_from(const HermitianEigen& eig, const std::function<double(double)>& f) {
  const std::vector<double> paired = paired_average(eig.values);
  const std::size_t n = eig.vectors.rows();
  CMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const double fc = f(paired[c]);
    if (fc == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = eig.vectors(r, c) * fc;
      for (std::size_t k = 0; k < n; ++k) m(r, k) += vr * std::conj(eig.vectors(k, c));
    }
  }
  // The exact result lies in the image of chi. Eigenvector round-off, scaled
  // up by f on small eigenvalues, pushes it slightly out; chi_inverse
  // projects back by averaging the redundant blocks.
  return chi_inverse(m, 1e-6);
}

HermitianEigen checked_chi_eigen(const QMatrix& a) {
  require_hermitian(a);
  return jacobi_eigh(chi_embed(hermitian_part(a)));
}

// Eigenvalues of a PSD candidate after the -1e-10 * scale test.
void require_psd(const QMatrix& a, const HermitianEigen& eig, const char* what) {
  if (eig.values.empty()) return;
  const double limit = -kZeroEigTol * scale_of(a);
  if (eig.values.front() < limit) {
    std::ostringstream msg;
    msg << what << ": matrix is not PSD (min eigenvalue " << eig.values.front() << ")";
    throw NotPSD(msg.str());
  }
}

}  // namespace

HermitianEigen jacobi_eigh(const CMatrix& input, const JacobiOptions& opts) {
  if (!input.is_square()) throw ShapeError("jacobi_eigh: matrix is not square");
  const std::size_t n = input.rows();
  CMatrix a = hermitian_part(input);
  CMatrix v = CMatrix::identity(n);
  CMatrix* vp = opts.want_vectors ? &v : nullptr;
  const double tol = opts.off_tol * scale_of(a);

  int sweep = 0;
  for (;; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (!std::isfinite(off)) throw NoConvergence("jacobi_eigh: non-finite entries");
    if (off <= tol) break;
    if (sweep >= opts.max_sweeps) {
      std::ostringstream msg;
      msg << "jacobi_eigh: off-diagonal norm " << off << " after " << sweep << " sweeps";
      throw NoConvergence(msg.str());
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, vp, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigen out;
  out.values.resize(n);
  if (opts.want_vectors) out.vectors = CMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]).real();
    if (opts.want_vectors)
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

void require_hermitian(const QMatrix& a, double tol) {
  if (!a.is_square()) throw NotHermitian("matrix is not square");
  if (!all_finite(a)) throw NotHermitian("matrix has non-finite entries");
  const double defect = hermitian_defect(a);
  if (defect > tol * scale_of(a)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (defect " << defect << ")";
    throw NotHermitian(msg.str());
  }
}

std::vector<double> paired_chi_eigenvalues(const QMatrix& a) {
  require_hermitian(a);
  JacobiOptions opts;
  opts.want_vectors = false;
  return paired_average(jacobi_eigh(chi_embed(hermitian_part(a)), opts).values);
}

Inertia hermitian_eigen(const QMatrix& a, double zero_tol) {
  const std::vector<double> chi_values = paired_chi_eigenvalues(a);
  const double thr = zero_tol * scale_of(a);
  Inertia in;
  in.eigenvalues.reserve(chi_values.size() / 2);
  for (std::size_t k = 0; k + 1 < chi_values.size(); k += 2) {
    const double lambda = chi_values[k];
    in.eigenvalues.push_back(lambda);
    if (lambda < -thr) {
      ++in.neg;
    } else if (lambda > thr) {
      ++in.pos;
    } else {
      ++in.zero;
    }
  }
  return in;
}

double min_eigenvalue(const QMatrix& hermitian) {
  if (hermitian.empty()) return 0.0;
  return paired_chi_eigenvalues(hermitian).front();
}

QMatrix spectral_function(const QMatrix& a, const std::function<double(double)>& f) {
  return spectral_from(checked_chi_eigen(a), f);
}

QMatrix psd_sqrt(const QMatrix& a) {
  if (a.empty()) return a;
  const HermitianEigen eig = checked_chi_eigen(a);
  require_psd(a, eig, "psd_sqrt");
  return spectral_from(eig, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

namespace {

QMatrix pinv_impl(const QMatrix& a, bool sqrt_first, const char* what) {
  if (a.empty()) return a;
  const HermitianEigen eig = checked_chi_eigen(a);
  require_psd(a, eig, what);
  const double lambda_max = eig.values.back();
  if (!(lambda_max > 0.0)) return QMatrix(a.rows(), a.cols());
  const double cut = kZeroEigTol * lambda_max;
  return spectral_from(eig, [cut, sqrt_first](double x) {
    if (x <= cut) return 0.0;
    return sqrt_first ? 1.0 / std::sqrt(x) : 1.0 / x;
  });
}

}  // namespace

QMatrix pinv_psd(const QMatrix& a) { return pinv_impl(a, false, "pinv_psd"); }

QMatrix pinv_psd_sqrt(const QMatrix& a) { return pinv_impl(a, true, "pinv_psd_sqrt"); }

double operator_norm(const QMatrix& g) {
  if (g.empty()) return 0.0;
  const CMatrix m = chi_embed(g);
  JacobiOptions opts;
  opts.want_vectors = false;
  const CMatrix gram = g.rows() <= g.cols() ? m * adjoint(m) : adjoint(m) * m;
  const double top = jacobi_eigh(gram, opts).values.back();
  return std::sqrt(std::max(top, 0.0));
}

QMatrix block2x2(const QMatrix& a, const QMatrix& b, const QMatrix& c) {
  if (!a.is_square() || !c.is_square() || b.rows() != a.rows() || b.cols() != c.rows()) {
    throw ShapeError("block2x2: incompatible block shapes");
  }
  QMatrix k(a.rows() + c.rows(), a.rows() + c.rows());
  k.set_block(0, 0, a);
  k.set_block(0, a.cols(), b);
  k.set_block(a.rows(), 0, adjoint(b));
  k.set_block(a.rows(), a.cols(), c);
  return k;
}

QMatrix extract_contraction(const QMatrix& a, const QMatrix& b, const QMatrix& c) {
  const QMatrix k = block2x2(a, b, c);
  // Both inverse square roots throw NotPSD on their own blocks first.
  const QMatrix a_inv_half = pinv_psd_sqrt(a);
  const QMatrix c_inv_half = pinv_psd_sqrt(c);
  if (!k.empty()) {
    const double lowest = min_eigenvalue(k);
    if (lowest < -1e-8 * scale_of(k)) {
      std::ostringstream msg;
      msg << "extract_contraction: [[A,B],[B*,C]] is not PSD (min eigenvalue " << lowest << ")";
      throw BlockNotPSD(msg.str());
    }
  }
  if (b.empty()) return QMatrix(a.rows(), c.rows());
  return a_inv_half * b * c_inv_half;
}

QMatrix psd_complete_3x3(const QMatrix& a, const QMatrix& b, const QMatrix& c, const QMatrix& d,
                         const QMatrix& e) {
  const QMatrix g1 = extract_contraction(a, b, c);
  const QMatrix g2 = extract_contraction(c, d, e);
  if (c.empty()) return QMatrix(a.rows(), e.rows());
  return psd_sqrt(a) * g1 * g2 * psd_sqrt(e);
}

QMatrix block3x3(const QMatrix& a, const QMatrix& b, const QMatrix& x, const QMatrix& c,
                 const QMatrix& d, const QMatrix& e) {
  const std::size_t na = a.rows();
  const std::size_t nc = c.rows();
  const std::size_t ne = e.rows();
  if (b.rows() != na || b.cols() != nc || d.rows() != nc || d.cols() != ne || x.rows() != na ||
      x.cols() != ne) {
    throw ShapeError("block3x3: incompatible block shapes");
  }
  QMatrix k(na + nc + ne, na + nc + ne);
  k.set_block(0, 0, a);
  k.set_block(0, na, b);
  k.set_block(0, na + nc, x);
  k.set_block(na, 0, adjoint(b));
  k.set_block(na, na, c);
  k.set_block(na, na + nc, d);
  k.set_block(na + nc, 0, adjoint(x));
  k.set_block(na + nc, na, adjoint(d));
  k.set_block(na + nc, na + nc, e);
  return k;
}

CMatrix inverse(const CMatrix& input) {
  if (!input.is_square()) throw ShapeError("inverse: matrix is not square");
  const std::size_t n = input.rows();
  CMatrix a = input;
  CMatrix inv = CMatrix::identity(n);
  const double floor = 1e-14 * scale_of(input);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (!(std::abs(a(pivot, col)) > floor)) throw SingularMatrix("inverse: matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Complex d = 1.0 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= d;
      inv(col, c) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = a(r, col);
      if (f == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

QMatrix inverse(const QMatrix& a) {
  const CMatrix m = inverse(chi_embed(a));
  return chi_inverse(m, 1e-8);
}

}  // namespace qherglotz
