#include "qherglotz/measures.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "qherglotz/embedding.hpp"
#include "qherglotz/qlinalg.hpp"

namespace qherglotz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const MeasureAtom* find_atom(const DiscreteQPositiveMeasure& nu, double t) {
  for (const auto& a : nu.atoms)
    if (angle_distance(a.t, t) <= kAtomSpacing) return &a;
  return nullptr;
}

bool shapes_ok(const DiscreteQPositiveMeasure& nu, const MeasureAtom& a) {
  return a.nu1.rows() == nu.s && a.nu1.cols() == nu.s && a.nu2.rows() == nu.s && a.nu2.cols() == nu.s;
}

// Support of mu: listed atoms plus reflection partners, deduplicated.
std::vector<double> mu_support(const DiscreteQPositiveMeasure& nu) {
  std::vector<double> pts;
  auto add = [&](double t) {
    for (double p : pts)
      if (angle_distance(p, t) <= kAtomSpacing) return;
    pts.push_back(t);
  };
  for (const auto& a : nu.atoms) {
    add(a.t);
    add(partner_angle(a.t));
  }
  return pts;
}

CMatrix mu_block_at(const DiscreteQPositiveMeasure& nu, double t) {
  const std::size_t s = nu.s;
  const MeasureAtom* here = find_atom(nu, t);
  const MeasureAtom* there = find_atom(nu, partner_angle(t));
  CMatrix m(2 * s, 2 * s);
  if (here != nullptr) {
    m.set_block(0, 0, here->nu1);
    m.set_block(0, s, here->nu2);
    m.set_block(s, 0, adjoint(here->nu2));
  }
  if (there != nullptr) m.set_block(s, s, entrywise_conj(there->nu1));
  return m;
}

void require_q_positive(const DiscreteQPositiveMeasure& nu) {
  const auto violations = validate_q_positive(nu);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "measure is not q-positive:";
  for (const auto& v : violations) msg << " [" << to_string(v.kind) << " at t=" << v.t << ": " << v.detail << "]";
  throw NotQPositive(msg.str());
}

void require_disjoint(const MixedMeasurePair& pair) {
  const auto plus = mu_support(pair.plus);
  for (double t : mu_support(pair.minus)) {
    for (double u : plus) {
      if (angle_distance(t, u) <= kAtomSpacing) {
        std::ostringstream msg;
        msg << "nu_+ and nu_- share the support point t=" << t;
        throw SupportOverlap(msg.str());
      }
    }
  }
}

}  // namespace

std::string to_string(MeasureViolation::Kind kind) {
  switch (kind) {
    case MeasureViolation::Kind::kShape: return "shape";
    case MeasureViolation::Kind::kAngleRange: return "angle-range";
    case MeasureViolation::Kind::kDuplicateAtom: return "duplicate-atom";
    case MeasureViolation::Kind::kNotHermitian: return "not-hermitian";
    case MeasureViolation::Kind::kPairingNotPSD: return "pairing-not-psd";
    case MeasureViolation::Kind::kAntisymmetry: return "antisymmetry";
  }
  return "unknown";
}

double partner_angle(double t) {
  const double p = std::fmod(kTwoPi - t, kTwoPi);
  return p < 0.0 ? p + kTwoPi : p;
}

double angle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

std::vector<MeasureViolation> validate_q_positive(const DiscreteQPositiveMeasure& nu) {
  using Kind = MeasureViolation::Kind;
  std::vector<MeasureViolation> out;

  bool structural_ok = true;
  for (std::size_t a = 0; a < nu.atoms.size(); ++a) {
    const MeasureAtom& atom = nu.atoms[a];
    if (!shapes_ok(nu, atom)) {
      out.push_back({Kind::kShape, atom.t, 0.0, "nu1 and nu2 must be s x s"});
      structural_ok = false;
    }
    if (!(atom.t >= 0.0 && atom.t < kTwoPi)) {
      out.push_back({Kind::kAngleRange, atom.t, 0.0, "t must lie in [0, 2 pi)"});
      structural_ok = false;
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (angle_distance(atom.t, nu.atoms[b].t) <= kAtomSpacing) {
        out.push_back({Kind::kDuplicateAtom, atom.t, angle_distance(atom.t, nu.atoms[b].t),
                       "atoms closer than the spacing tolerance"});
        structural_ok = false;
      }
    }
  }
  if (!structural_ok) return out;

  for (const auto& atom : nu.atoms) {
    const double defect = hermitian_defect(atom.nu1);
    if (defect > kMeasureTol * scale_of(atom.nu1)) {
      out.push_back({Kind::kNotHermitian, atom.t, defect, "nu1(t) is not Hermitian"});
    }
    const MeasureAtom* partner = find_atom(nu, partner_angle(atom.t));
    CMatrix residual = atom.nu2;
    if (partner != nullptr) residual += transpose(partner->nu2);
    const double anti = max_abs(residual);
    if (anti > kMeasureTol * scale_of(atom.nu2)) {
      std::ostringstream msg;
      msg << "nu2(t) + nu2(t')^T has entry of size " << anti;
      out.push_back({Kind::kAntisymmetry, atom.t, anti, msg.str()});
    }
  }

  for (const auto& mb : mu_blocks(nu)) {
    JacobiOptions opts;
    opts.want_vectors = false;
    const double lowest = jacobi_eigh(mb.block, opts).values.front();
    if (lowest < -kMeasureTol * scale_of(mb.block)) {
      std::ostringstream msg;
      msg << "mu block has eigenvalue " << lowest;
      out.push_back({Kind::kPairingNotPSD, mb.t, -lowest, msg.str()});
    }
  }
  return out;
}

std::vector<MuBlock> mu_blocks(const DiscreteQPositiveMeasure& nu) {
  std::vector<MuBlock> out;
  for (double t : mu_support(nu)) out.push_back({t, mu_block_at(nu, t)});
  return out;
}

namespace {

QMatrix synthesize_unchecked(const std::vector<MuBlock>& blocks, std::size_t s, long n) {
  CMatrix r(2 * s, 2 * s);
  for (const auto& mb : blocks) {
    const double phase = static_cast<double>(n) * mb.t;
    const Complex e{std::cos(phase), std::sin(phase)};
    r += e * mb.block;
  }
  return chi_inverse(r);
}

}  // namespace

QMatrix herglotz_synthesize(const DiscreteQPositiveMeasure& nu, long n) {
  require_q_positive(nu);
  return synthesize_unchecked(mu_blocks(nu), nu.s, n);
}

HermitianSequence synthesize_sequence(const DiscreteQPositiveMeasure& nu, std::size_t n_max) {
  require_q_positive(nu);
  const auto blocks = mu_blocks(nu);
  std::vector<QMatrix> values;
  values.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) values.push_back(synthesize_unchecked(blocks, nu.s, static_cast<long>(n)));
  return HermitianSequence(std::move(values));
}

QMatrix synthesize_indefinite(const MixedMeasurePair& pair, long n) {
  if (pair.plus.s != pair.minus.s) throw ShapeError("nu_+ and nu_- have different block sizes");
  require_disjoint(pair);
  return herglotz_synthesize(pair.plus, n) - herglotz_synthesize(pair.minus, n);
}

HermitianSequence synthesize_indefinite_sequence(const MixedMeasurePair& pair, std::size_t n_max) {
  if (pair.plus.s != pair.minus.s) throw ShapeError("nu_+ and nu_- have different block sizes");
  require_disjoint(pair);
  require_q_positive(pair.plus);
  require_q_positive(pair.minus);
  const auto plus = mu_blocks(pair.plus);
  const auto minus = mu_blocks(pair.minus);
  std::vector<QMatrix> values;
  values.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const long k = static_cast<long>(n);
    values.push_back(synthesize_unchecked(plus, pair.plus.s, k) - synthesize_unchecked(minus, pair.minus.s, k));
  }
  return HermitianSequence(std::move(values));
}

std::size_t card_supp(const DiscreteQPositiveMeasure& nu) {
  std::size_t total = 0;
  for (const auto& mb : mu_blocks(nu)) {
    JacobiOptions opts;
    opts.want_vectors = false;
    const auto values = jacobi_eigh(mb.block, opts).values;
    const double thr = kMeasureTol * scale_of(mb.block);
    total += static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [thr](double v) { return std::abs(v) > thr; }));
  }
  return total / 2;
}

double total_mass_bound(const DiscreteQPositiveMeasure& nu) {
  require_q_positive(nu);
  double total = 0.0;
  for (const auto& atom : nu.atoms) total += operator_norm(from_complex_parts(atom.nu1, atom.nu2));
  return total;
}

}  // namespace qherglotz
