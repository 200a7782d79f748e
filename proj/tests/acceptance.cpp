// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "qherglotz/embedding.hpp"
#include "qherglotz/measures.hpp"
#include "qherglotz/moments.hpp"
#include "qherglotz/qlinalg.hpp"
#include "qherglotz/random.hpp"
#include "qherglotz/realize.hpp"
#include "qherglotz/slicefn.hpp"

using namespace qherglotz;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel(double err, double scale) { return err / std::max(1.0, scale); }

Verdict chi_homomorphism() {
  const auto start = Clock::now();
  Rng rng(101);
  double mult = 0, star = 0, round = 0;
  for (int k = 0; k < 500; ++k) {
    const QMatrix a = random_qmatrix(rng, 3, 3), b = random_qmatrix(rng, 3, 3);
    const CMatrix ab = chi_embed(a * b);
    mult = std::max(mult, rel(max_abs_diff(ab, chi_embed(a) * chi_embed(b)), max_abs(ab)));
    star = std::max(star, rel(max_abs_diff(chi_embed(adjoint(a)), adjoint(chi_embed(a))), max_abs(a)));
    round = std::max(round, rel(max_abs_diff(chi_inverse(chi_embed(a)), a), max_abs(a)));
  }
  const double t = seconds_since(start);
  const double worst = std::max({mult, star, round});
  return {worst <= 1e-10 && t < 5.0,
          fmt("mult %.2e star %.2e round-trip %.2e (tol 1e-10), %.2f s (limit 5 s)", mult, star, round, t)};
}

Verdict inertia_halving() {
  Rng rng(202);
  int failures = 0;
  for (int k = 0; k < 200; ++k) {
    const QMatrix a = random_hermitian(rng, 4);
    const Inertia in = hermitian_eigen(a);
    std::size_t chi_neg = 0;
    for (double ev : testing::eigen_chi_eigenvalues(a))
      if (ev < -kZeroEigTol * scale_of(a)) ++chi_neg;
    if (chi_neg != 2 * in.neg) ++failures;
  }
  return {failures == 0, fmt("%d/200 mismatches against the Eigen count on chi(A)", failures)};
}

Verdict synthesis_positivity() {
  Rng rng(303);
  double worst_eig = HUGE_VAL, worst_herm = 0;
  bool pass = true;
  for (int k = 0; k < 50; ++k) {
    MeasureShape shape;
    shape.s = 1 + rng.index(2);
    shape.pairs = 1 + rng.index(4);
    const auto nu = random_q_positive_measure(rng, shape);
    const HermitianSequence seq = synthesize_sequence(nu, 8);
    for (std::size_t n = 0; n <= 8; ++n) {
      const QMatrix t = build_toeplitz(seq, n);
      const double e = testing::eigen_min_eigenvalue(t) / scale_of(t);
      worst_eig = std::min(worst_eig, e);
      if (e < -1e-8) pass = false;
      const QMatrix r = herglotz_synthesize(nu, static_cast<long>(n));
      const double h = max_abs_diff(adjoint(herglotz_synthesize(nu, -static_cast<long>(n))), r) / scale_of(r);
      worst_herm = std::max(worst_herm, h);
      if (h > 1e-12) pass = false;
    }
  }
  return {pass, fmt("min eig/scale %.2e (tol -1e-8), hermitian defect %.2e (tol 1e-12)", worst_eig, worst_herm)};
}

Verdict extension() {
  const auto start = Clock::now();
  Rng rng(404);
  double worst = HUGE_VAL;
  bool pass = true, exact = true;
  for (int k = 0; k < 50; ++k) {
    MeasureShape shape;
    shape.s = 1 + rng.index(2);
    shape.pairs = 1 + rng.index(4);
    const std::size_t n = 1 + rng.index(4);
    const HermitianSequence seq = synthesize_sequence(random_q_positive_measure(rng, shape), n);
    const HermitianSequence ext = caratheodory_extend(seq, 4);
    for (std::size_t m = n + 1; m <= ext.support(); ++m) {
      const QMatrix t = build_toeplitz(ext, m);
      const double e = testing::eigen_min_eigenvalue(t) / scale_of(t);
      worst = std::min(worst, e);
      if (e < -1e-7) pass = false;
    }
    for (std::size_t m = 0; m <= n; ++m) exact = exact && ext.nonnegative()[m] == seq.nonnegative()[m];
  }
  const double t = seconds_since(start);
  return {pass && exact && t < 30.0, fmt("min eig/scale %.2e (tol -1e-7), originals %s, %.2f s (limit 30 s)", worst,
                                         exact ? "bit-exact" : "CHANGED", t)};
}

Verdict indefinite_pair_count() {
  Rng rng(505);
  int misses = 0;
  for (std::size_t s : {1u, 2u})
    for (std::size_t kappa : {1u, 2u})
      for (int rep = 0; rep < 5; ++rep) {
        const auto pair = testing::random_mixed_pair(rng, s, kappa, 2, 0.35);
        const std::size_t n_max = 8 + 2 * kappa;
        const auto ns = negative_squares(synthesize_indefinite_sequence(pair, n_max), n_max);
        if (card_supp(pair.minus) != kappa || ns.kappa != kappa || !ns.stabilized) ++misses;
      }
  return {misses == 0, fmt("%d/20 miscounts (kappa in {1,2}, s in {1,2}, N_max = 8+2kappa)", misses)};
}

// Diagonal U = diag(e^{i theta_k}) with distinct angles in (0, pi) and real C:
// each negative signature entry contributes one negative square.
PontryaginRealization equality_case(Rng& rng, std::size_t kappa) {
  const std::size_t d = kappa + 2;
  const SignatureGram j = SignatureGram::split(2, kappa);
  QMatrix u(d, d), c(d, 1);
  for (std::size_t k = 0; k < d; ++k) {
    const double theta = (k + rng.uniform(0.2, 0.8)) * kPi / static_cast<double>(d);
    u(k, k) = Quaternion{std::cos(theta), std::sin(theta), 0, 0};
    c(k, 0) = Quaternion{rng.uniform(0.5, 1.5)};
  }
  return {j, u, c};
}

Verdict realization_sufficiency() {
  Rng rng(606);
  int violations = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t kappa = static_cast<std::size_t>(k % 3);
    const std::size_t d = kappa + 1 + rng.index(3);
    const SignatureGram j = SignatureGram::split(d - kappa, kappa);
    const PontryaginRealization r{j, random_j_unitary(j, rng), random_qmatrix(rng, d, 1 + rng.index(2))};
    if (!verify_negative_squares_bound(r, 8).ok) ++violations;
  }
  std::string eq;
  bool equality = true;
  for (std::size_t kappa : {0u, 1u, 2u}) {
    const auto r = equality_case(rng, kappa);
    const auto b = verify_negative_squares_bound(r, 8 + 2 * kappa);
    equality = equality && b.ok && b.kappa_seq == kappa;
    eq += fmt(" %zu->%zu", kappa, b.kappa_seq);
  }
  return {violations == 0 && equality,
          fmt("%d/100 bound violations; equality cases (J.kappa->kappa_seq):%s", violations, eq.c_str())};
}

Verdict realization_uniqueness() {
  Rng rng(707);
  double worst_res = 0, worst_int = 0;
  int failures = 0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t kappa = rng.index(2), d = kappa + 1 + rng.index(3);
    const SignatureGram j = SignatureGram::split(d - kappa, kappa);
    const PontryaginRealization r1{j, random_j_unitary(j, rng), random_qmatrix(rng, d, 1 + rng.index(2))};
    const QMatrix w = random_j_unitary(j, rng);
    const QMatrix w_inv = j.left(j.right(adjoint(w)));
    const PontryaginRealization r2{j, w * r1.U * w_inv, w * r1.C};
    std::vector<long> range;
    for (long n = 0; n <= static_cast<long>(2 * d); ++n) range.push_back(n);
    try {
      const QMatrix s = align_realizations(r1, r2, range);
      double res = 0;
      QMatrix x1 = r1.C, x2 = r2.C;
      for (std::size_t n = 0; n < range.size(); ++n) {
        res = std::max(res, max_abs_diff(s * x1, x2) / scale_of(x2));
        x1 = r1.U * x1;
        x2 = r2.U * x2;
      }
      const double inter = max_abs_diff(s * r1.U, r2.U * s) / (scale_of(s) * scale_of(r1.U));
      worst_res = std::max(worst_res, res);
      worst_int = std::max(worst_int, inter);
      if (res > 1e-6 || inter > 1e-6) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  return {failures == 0,
          fmt("%d/20 failures; residual %.2e, intertwining %.2e (tol 1e-6)", failures, worst_res, worst_int)};
}

Verdict dilation() {
  Rng rng(808);
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = 1 + rng.index(4);
    const QMatrix v = random_unitary(rng, d);
    const QMatrix u = dilate_coisometry(v);
    worst = std::max(worst, max_abs(adjoint(u) * u - QMatrix::identity(2 * d)));
    QMatrix un = QMatrix::identity(2 * d), vn = QMatrix::identity(d);
    for (int n = 0; n <= 10; ++n) {
      worst = std::max(worst, max_abs_diff(un.block(d, d, d, d), vn));
      un = un * u;
      vn = vn * v;
    }
  }
  return {worst <= 1e-9, fmt("max unitarity/compression error %.2e (tol 1e-9)", worst)};
}

Quaternion ball_point(Rng& rng, double radius) {
  const Quaternion g = random_quaternion(rng);
  return (radius * std::pow(rng.uniform(), 0.25) / g.abs()) * g;
}

Verdict kernel_identities() {
  Rng rng(909);
  double worst_kernel = 0;
  for (int m = 0; m < 10; ++m) {
    MeasureShape shape;
    shape.s = 1 + rng.index(2);
    shape.pairs = 1 + rng.index(4);
    const auto nu = random_q_positive_measure(rng, shape);
    const CaratheodoryFunction phi(synthesize_sequence(nu, 80), total_mass_bound(nu));
    for (int k = 0; k < 20; ++k)
      worst_kernel =
          std::max(worst_kernel, kernel_identity_residual(phi, ball_point(rng, 0.5), ball_point(rng, 0.5), 60));
  }
  double worst_global = 0;
  for (int k = 0; k < 200; ++k) {
    const auto g = herglotz_kernel_global(ball_point(rng, 0.9), rng.uniform(0, 2 * kPi), random_imaginary_unit(rng));
    worst_global = std::max(worst_global, g.discrepancy);
  }
  return {worst_kernel <= 1e-8 && worst_global <= 1e-10,
          fmt("kernel residual %.2e (tol 1e-8), global dual path %.2e (tol 1e-10)", worst_kernel, worst_global)};
}

Verdict slice_positivity() {
  Rng rng(1010);
  double worst_re = HUGE_VAL, worst_ratio = 0;
  for (int k = 0; k < 20; ++k) {
    SliceMeasure m;
    m.I = random_imaginary_unit(rng);
    m.J = frame_complete(m.I).J;
    const std::size_t atoms = 1 + rng.index(6);
    for (std::size_t a = 0; a < atoms; ++a) m.atoms.push_back({rng.uniform(0, 2 * kPi), rng.uniform(0, 1), rng.normal()});
    for (int a = 0; a < 50; ++a)
      for (int b = 0; b < 50; ++b)
        worst_re = std::min(worst_re, synthesize_slice(m, std::polar(0.99 * a / 49.0, 2 * kPi * b / 50.0)).w);
    const double mass = slice_mass(m);
    for (long n = 1; n <= 30; ++n) worst_ratio = std::max(worst_ratio, coefficient_from_measure(m, n).abs() / mass);
  }
  return {worst_re >= -1e-12 && worst_ratio <= 2.0 * (1 + 1e-12),
          fmt("min Re %.2e (tol -1e-12), max |a_n|/mass %.6f (limit 2)", worst_re, worst_ratio)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"chi homomorphism", chi_homomorphism},
      {"inertia halving", inertia_halving},
      {"synthesis positivity", synthesis_positivity},
      {"caratheodory extension", extension},
      {"negative squares of indefinite pairs", indefinite_pair_count},
      {"realization bound", realization_sufficiency},
      {"realization uniqueness", realization_uniqueness},
      {"coisometry dilation", dilation},
      {"kernel identities", kernel_identities},
      {"slice positivity", slice_positivity},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
