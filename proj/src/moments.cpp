#include "qherglotz/moments.hpp"

#include <sstream>

namespace qherglotz {

HermitianSequence::HermitianSequence(std::vector<QMatrix> values) : s_(0), values_(std::move(values)) {
  if (values_.empty()) throw ShapeError("HermitianSequence: r(0) is required");
  s_ = values_.front().rows();
  if (s_ == 0) throw ShapeError("HermitianSequence: block size must be positive");
  for (const auto& v : values_) {
    if (v.rows() != s_ || v.cols() != s_) throw ShapeError("HermitianSequence: blocks must be s x s");
  }
  require_hermitian(values_.front());
  values_.front() = hermitian_part(values_.front());
}

HermitianSequence HermitianSequence::scalar(const std::vector<double>& values) {
  std::vector<QMatrix> blocks;
  blocks.reserve(values.size());
  for (double v : values) blocks.push_back(QMatrix{{Quaternion{v}}});
  return HermitianSequence(std::move(blocks));
}

QMatrix HermitianSequence::at(long n) const {
  const std::size_t m = static_cast<std::size_t>(n < 0 ? -n : n);
  if (m >= values_.size()) {
    std::ostringstream msg;
    msg << "sequence index " << n << " outside support {-" << support() << ", ..., " << support() << "}";
    throw SupportExceeded(msg.str());
  }
  return n < 0 ? adjoint(values_[m]) : values_[m];
}

HermitianSequence HermitianSequence::truncated(std::size_t m) const {
  if (m > support()) throw SupportExceeded("truncation beyond support");
  return HermitianSequence(std::vector<QMatrix>(values_.begin(), values_.begin() + static_cast<long>(m) + 1));
}

QMatrix build_toeplitz(const HermitianSequence& seq, std::size_t n) {
  if (n > seq.support()) {
    std::ostringstream msg;
    msg << "T_" << n << " needs r(" << n << ") but the support radius is " << seq.support();
    throw SupportExceeded(msg.str());
  }
  const std::size_t s = seq.block_size();
  const std::vector<QMatrix>& r = seq.nonnegative();
  std::vector<QMatrix> neg;
  neg.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) neg.push_back(adjoint(r[k]));

  QMatrix t((n + 1) * s, (n + 1) * s);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t l = 0; l <= n; ++l) {
      t.set_block(j * s, l * s, l >= j ? r[l - j] : neg[j - l]);
    }
  }
  return t;
}

PdVerdict is_positive_definite(const HermitianSequence& seq, std::size_t n, double tol) {
  const QMatrix t = build_toeplitz(seq, n);
  const double lowest = min_eigenvalue(t);
  return {lowest >= -tol * scale_of(t), lowest};
}

NegativeSquares negative_squares(const HermitianSequence& seq, std::size_t n_max) {
  if (n_max > seq.support()) {
    std::ostringstream msg;
    msg << "negative_squares: N_max " << n_max << " exceeds support radius " << seq.support();
    throw SupportExceeded(msg.str());
  }
  NegativeSquares out;
  out.profile.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.profile.push_back(hermitian_eigen(build_toeplitz(seq, n)).neg);
    out.kappa = std::max(out.kappa, out.profile.back());
  }
  const std::size_t len = out.profile.size();
  out.stabilized = len >= 3 && out.profile[len - 1] == out.profile[len - 2] &&
                   out.profile[len - 2] == out.profile[len - 3];
  return out;
}

namespace {

// r(N+1) for a sequence known on {-N, ..., N}.
QMatrix next_moment(const std::vector<QMatrix>& r) {
  const std::size_t n = r.size() - 1;
  const std::size_t s = r.front().rows();
  if (n == 0) return QMatrix(s, s);

  const QMatrix& a = r.front();
  const std::vector<QMatrix> row(r.begin() + 1, r.end());
  const std::vector<QMatrix> col(r.rbegin(), r.rend() - 1);
  const QMatrix b = hstack<Quaternion>(row);
  const QMatrix d = vstack<Quaternion>(col);
  const QMatrix c = build_toeplitz(HermitianSequence(std::vector<QMatrix>(r.begin(), r.end() - 1)), n - 1);
  return psd_complete_3x3(a, b, c, d, a);
}

}  // namespace

HermitianSequence caratheodory_extend(const HermitianSequence& seq, std::size_t steps) {
  const std::size_t n = seq.support();
  const PdVerdict start = is_positive_definite(seq, n);
  if (!start.ok) {
    std::ostringstream msg;
    msg << "caratheodory_extend: T_" << n << " is not positive semidefinite (min eigenvalue "
        << start.min_eig << ")";
    throw NotPD(msg.str());
  }

  std::vector<QMatrix> r = seq.nonnegative();
  for (std::size_t k = 1; k <= steps; ++k) {
    QMatrix x;
    try {
      x = next_moment(r);
    } catch (const BlockNotPSD& e) {
      throw CompletionFailure(std::string("caratheodory_extend: ") + e.what());
    } catch (const NotPSD& e) {
      throw CompletionFailure(std::string("caratheodory_extend: ") + e.what());
    }
    r.push_back(std::move(x));

    HermitianSequence current(r);
    const QMatrix t = build_toeplitz(current, current.support());
    const double lowest = min_eigenvalue(t);
    if (lowest < -kExtensionTol * scale_of(t)) {
      std::ostringstream msg;
      msg << "caratheodory_extend: T_" << current.support() << " has eigenvalue " << lowest;
      throw CompletionFailure(msg.str());
    }
  }
  return HermitianSequence(std::move(r));
}

}  // namespace qherglotz
