#include "qherglotz/realize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qherglotz/embedding.hpp"
#include "qherglotz/qlinalg.hpp"

namespace qherglotz {

SignatureGram::SignatureGram(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int v : signs_)
    if (v != 1 && v != -1) throw ShapeError("signature entries must be +1 or -1");
}

SignatureGram SignatureGram::split(std::size_t positive, std::size_t negative) {
  std::vector<int> signs(positive, 1);
  signs.insert(signs.end(), negative, -1);
  return SignatureGram(std::move(signs));
}

std::size_t SignatureGram::kappa() const {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), -1));
}

QMatrix SignatureGram::matrix() const {
  QMatrix j(signs_.size(), signs_.size());
  for (std::size_t a = 0; a < signs_.size(); ++a) j(a, a) = Quaternion{static_cast<double>(signs_[a])};
  return j;
}

QMatrix SignatureGram::left(const QMatrix& m) const {
  if (m.rows() != signs_.size()) throw ShapeError("J * m: shape mismatch");
  QMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (signs_[r] < 0)
      for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = -out(r, c);
  return out;
}

QMatrix SignatureGram::right(const QMatrix& m) const {
  if (m.cols() != signs_.size()) throw ShapeError("m * J: shape mismatch");
  QMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (signs_[c] < 0) out(r, c) = -out(r, c);
  return out;
}

double j_unitarity_defect(const SignatureGram& J, const QMatrix& U) {
  return max_abs(adjoint(U) * J.left(U) - J.matrix());
}

double j_unitarity_scale(const QMatrix& U) {
  const double m = max_abs(U);
  return std::max(1.0, m * m);
}

void require_valid(const PontryaginRealization& R) {
  const std::size_t d = R.J.dimension();
  if (R.U.rows() != d || R.U.cols() != d) throw ShapeError("realization: U must be d x d");
  if (R.C.rows() != d || R.C.cols() == 0) throw ShapeError("realization: C must be d x s");
  const double defect = j_unitarity_defect(R.J, R.U);
  if (!(defect <= kJUnitaryTol * j_unitarity_scale(R.U))) {
    std::ostringstream msg;
    msg << "U^* J U differs from J by " << defect;
    throw NotJUnitary(msg.str());
  }
}

namespace {

QMatrix j_inverse(const PontryaginRealization& R) { return R.J.left(R.J.right(adjoint(R.U))); }

QMatrix moment_unchecked(const PontryaginRealization& R, long n) {
  const unsigned k = static_cast<unsigned>(n < 0 ? -n : n);
  const QMatrix base = n < 0 ? j_inverse(R) : R.U;
  return adjoint(R.C) * R.J.left(matrix_power(base, k) * R.C);
}

}  // namespace

QMatrix moment(const PontryaginRealization& R, long n) {
  require_valid(R);
  return moment_unchecked(R, n);
}

HermitianSequence moment_sequence(const PontryaginRealization& R, std::size_t n_max) {
  require_valid(R);
  std::vector<QMatrix> values;
  values.reserve(n_max + 1);
  QMatrix power = R.C;
  for (std::size_t n = 0; n <= n_max; ++n) {
    values.push_back(adjoint(R.C) * R.J.left(power));
    power = R.U * power;
  }
  // r(0) = C^* J C is Hermitian up to rounding only.
  values.front() = hermitian_part(values.front());
  return HermitianSequence(std::move(values));
}

NegativeSquaresBound verify_negative_squares_bound(const PontryaginRealization& R, std::size_t n_max) {
  NegativeSquaresBound out;
  out.profile = negative_squares(moment_sequence(R, n_max), n_max);
  out.kappa_seq = out.profile.kappa;
  out.ok = out.kappa_seq <= R.J.kappa();
  return out;
}

QMatrix dilate_coisometry(const QMatrix& V) {
  if (!V.is_square()) throw ShapeError("dilate_coisometry: V must be square");
  const std::size_t d = V.rows();
  const QMatrix id = QMatrix::identity(d);
  const double defect = max_abs(V * adjoint(V) - id);
  if (defect > 1e-10 * scale_of(V)) {
    std::ostringstream msg;
    msg << "V V^* differs from I by " << defect;
    throw NotCoisometry(msg.str());
  }
  const QMatrix vstar = adjoint(V);
  QMatrix u(2 * d, 2 * d);
  u.set_block(0, 0, vstar);
  u.set_block(0, d, id - vstar * V);
  u.set_block(d, d, V);
  return u;
}

QMatrix cayley_transform(const QMatrix& S) {
  if (!S.is_square()) throw ShapeError("cayley_transform: S must be square");
  const QMatrix id = QMatrix::identity(S.rows());
  return inverse(QMatrix(id - S)) * (id + S);
}

QMatrix random_j_unitary(const SignatureGram& J, Rng& rng) {
  const std::size_t d = J.dimension();
  const double amplitude = 0.5 / std::sqrt(static_cast<double>(std::max<std::size_t>(d, 1)));
  for (int attempt = 0; attempt < 100; ++attempt) {
    const QMatrix g = amplitude * random_qmatrix(rng, d, d);
    const QMatrix k = 0.5 * (g - adjoint(g));
    try {
      QMatrix u = cayley_transform(J.left(k));
      if (j_unitarity_defect(J, u) <= 1e-9 * j_unitarity_scale(u)) return u;
    } catch (const SingularMatrix&) {
    }
  }
  throw DegenerateSeed("random_j_unitary: 100 draws without a usable Cayley transform");
}

QMatrix random_j_unitary(const SignatureGram& J, std::uint64_t seed) {
  Rng rng(seed);
  return random_j_unitary(J, rng);
}

namespace {

// [U^n C for n in n_range] side by side.
QMatrix krylov_block(const PontryaginRealization& R, const std::vector<long>& n_range) {
  std::vector<QMatrix> parts;
  parts.reserve(n_range.size());
  const QMatrix inv = j_inverse(R);
  for (long n : n_range) {
    const unsigned k = static_cast<unsigned>(n < 0 ? -n : n);
    parts.push_back(matrix_power(n < 0 ? inv : R.U, k) * R.C);
  }
  return hstack<Quaternion>(parts);
}

// Gram K K^* after checking that K has full row rank.
CMatrix full_rank_gram(const QMatrix& k, const char* which) {
  const CMatrix ck = chi_embed(k);
  const CMatrix gram = hermitian_part(CMatrix(ck * adjoint(ck)));
  JacobiOptions opts;
  opts.want_vectors = false;
  const auto values = jacobi_eigh(gram, opts).values;
  const double top = std::max(values.back(), 0.0);
  const double sigma_min = std::sqrt(std::max(values.front(), 0.0));
  if (top == 0.0 || sigma_min < kSpanRankTol * std::sqrt(top)) {
    std::ostringstream msg;
    msg << which << ": vectors U^n C do not span the space (smallest singular value " << sigma_min
        << ", largest " << std::sqrt(top) << ")";
    throw SpanDeficient(msg.str());
  }
  return gram;
}

}  // namespace

QMatrix align_realizations(const PontryaginRealization& R1, const PontryaginRealization& R2,
                           const std::vector<long>& n_range) {
  require_valid(R1);
  require_valid(R2);
  if (R1.C.cols() != R2.C.cols()) throw ShapeError("align_realizations: realizations have different s");
  if (n_range.empty()) throw ShapeError("align_realizations: empty index range");

  const QMatrix k1 = krylov_block(R1, n_range);
  const QMatrix k2 = krylov_block(R2, n_range);
  const CMatrix gram1 = full_rank_gram(k1, "first realization");
  full_rank_gram(k2, "second realization");
  if (R1.J.dimension() != R2.J.dimension())
    throw NoUnitaryAlignment("align_realizations: spaces have different dimensions");

  const CMatrix cs = chi_embed(k2) * adjoint(chi_embed(k1)) * inverse(gram1);
  const QMatrix S = chi_inverse(cs, 1e-8);

  std::ostringstream msg;
  const double residual = max_abs(S * k1 - k2);
  if (residual > kAlignResidualTol * std::max(scale_of(k1), scale_of(k2))) {
    msg << "align_realizations: S U1^n C1 = U2^n C2 fails with residual " << residual;
    throw NoUnitaryAlignment(msg.str());
  }
  const double isometry = max_abs(adjoint(S) * R2.J.left(S) - R1.J.matrix());
  if (isometry > kAlignIsometryTol * j_unitarity_scale(S)) {
    msg << "align_realizations: S^* J2 S differs from J1 by " << isometry;
    throw NoUnitaryAlignment(msg.str());
  }
  const double intertwining = max_abs(S * R1.U - R2.U * S);
  if (intertwining > kAlignIsometryTol * std::max(scale_of(S), 1.0) * std::max(scale_of(R1.U), scale_of(R2.U))) {
    msg << "align_realizations: S U1 differs from U2 S by " << intertwining;
    throw NoUnitaryAlignment(msg.str());
  }
  return S;
}

}  // namespace qherglotz
