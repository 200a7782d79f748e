#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "qherglotz/embedding.hpp"
#include "qherglotz/measures.hpp"
#include "qherglotz/random.hpp"

using namespace qherglotz;

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix c1(Complex v) { return CMatrix{{v}}; }

DiscreteQPositiveMeasure scalar_measure(std::initializer_list<std::pair<double, double>> atoms) {
  DiscreteQPositiveMeasure nu;
  nu.s = 1;
  for (const auto& [t, w] : atoms) nu.atoms.push_back({t, c1(w), c1(0)});
  return nu;
}

// Direct quaternion sum of e^{int} (nu1 + nu2 j), left multiplication by the
// i-complex phase.
QMatrix direct_moment(const DiscreteQPositiveMeasure& nu, long n) {
  QMatrix r(nu.s, nu.s);
  for (const auto& a : nu.atoms) {
    const double ph = static_cast<double>(n) * a.t;
    r += Quaternion{std::cos(ph), std::sin(ph), 0, 0} * from_complex_parts(a.nu1, a.nu2);
  }
  return r;
}

}  // namespace

TEST_CASE("partner angles") {
  CHECK(partner_angle(0.0) == 0.0);
  CHECK(partner_angle(kPi) == doctest::Approx(kPi));
  CHECK(partner_angle(kPi / 2) == doctest::Approx(3 * kPi / 2));
  CHECK(angle_distance(0.01, 2 * kPi - 0.01) == doctest::Approx(0.02));
}

TEST_CASE("q-positivity validation examples") {
  CHECK(validate_q_positive(scalar_measure({{kPi, 1}})).empty());
  CHECK(validate_q_positive(scalar_measure({{kPi / 2, 1}, {3 * kPi / 2, 1}})).empty());
  CHECK(validate_q_positive(scalar_measure({{kPi / 2, 1}})).empty());

  auto v = validate_q_positive(scalar_measure({{kPi, -1}}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == MeasureViolation::Kind::kPairingNotPSD);

  // nu2(pi/2) = 1 with no partner breaks antisymmetry.
  DiscreteQPositiveMeasure nu;
  nu.atoms.push_back({kPi / 2, c1(2), c1(1)});
  v = validate_q_positive(nu);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].kind == MeasureViolation::Kind::kAntisymmetry);
  // ... which the partner repairs, and then the mu block is [[2, 1], [1, 2]].
  nu.atoms.push_back({3 * kPi / 2, c1(2), c1(-1)});
  CHECK(validate_q_positive(nu).empty());

  // At t = 0 the partner is itself: nu2 must be antisymmetric, i.e. zero for s = 1.
  v = validate_q_positive(DiscreteQPositiveMeasure{1, {{0.0, c1(1), c1(0.5)}}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == MeasureViolation::Kind::kAntisymmetry);

  v = validate_q_positive(DiscreteQPositiveMeasure{1, {{0.0, c1(Complex{1, 1}), c1(0)}}});
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].kind == MeasureViolation::Kind::kNotHermitian);

  v = validate_q_positive(scalar_measure({{7.0, 1}}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == MeasureViolation::Kind::kAngleRange);
  v = validate_q_positive(scalar_measure({{1.0, 1}, {1.0 + 1e-12, 1}}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == MeasureViolation::Kind::kDuplicateAtom);
  v = validate_q_positive(DiscreteQPositiveMeasure{2, {{1.0, c1(1), c1(0)}}});
  CHECK(v.at(0).kind == MeasureViolation::Kind::kShape);
}

TEST_CASE("synthesis examples") {
  const auto delta_pi = scalar_measure({{kPi, 1}});
  for (long n = -5; n <= 5; ++n) {
    CHECK(testing::qdiff(herglotz_synthesize(delta_pi, n)(0, 0), Quaternion{n % 2 == 0 ? 1.0 : -1.0}) <= 1e-14);
  }
  const auto cosine = scalar_measure({{kPi / 2, 1}, {3 * kPi / 2, 1}});
  for (long n = 0; n <= 8; ++n) {
    const Quaternion r = herglotz_synthesize(cosine, n)(0, 0);
    CHECK(testing::qdiff(r, Quaternion{2 * std::cos(n * kPi / 2)}) <= 1e-14);
  }
  CHECK_THROWS_AS(herglotz_synthesize(scalar_measure({{kPi, -1}}), 0), NotQPositive);

  // r(0) is the total weight.
  Rng rng(5);
  const auto nu = random_q_positive_measure(rng, MeasureShape{2, 3});
  QMatrix total(2, 2);
  for (const auto& a : nu.atoms) total += from_complex_parts(a.nu1, a.nu2);
  CHECK(max_abs_diff(herglotz_synthesize(nu, 0), total) <= 1e-13 * scale_of(total));
}

TEST_CASE("indefinite synthesis examples") {
  const MixedMeasurePair pair{scalar_measure({{0.0, 2}}), scalar_measure({{kPi, 1}})};
  for (long n = 0; n <= 6; ++n) {
    CHECK(testing::qdiff(synthesize_indefinite(pair, n)(0, 0), Quaternion{2.0 - (n % 2 == 0 ? 1.0 : -1.0)}) <= 1e-14);
  }
  const MixedMeasurePair no_minus{scalar_measure({{1.0, 1}}), DiscreteQPositiveMeasure{}};
  CHECK(max_abs_diff(synthesize_indefinite(no_minus, 3), herglotz_synthesize(no_minus.plus, 3)) == 0.0);
  const MixedMeasurePair same{scalar_measure({{kPi, 1}}), scalar_measure({{kPi, 1}})};
  CHECK_THROWS_AS(synthesize_indefinite(same, 1), SupportOverlap);
  // The partner of 1.0 is a support point of the reflected measure.
  const MixedMeasurePair reflected{scalar_measure({{1.0, 1}}), scalar_measure({{2 * kPi - 1.0, 1}})};
  CHECK_THROWS_AS(synthesize_indefinite(reflected, 1), SupportOverlap);
}

TEST_CASE("card supp") {
  CHECK(card_supp(scalar_measure({{kPi, 1}})) == 1);
  CHECK(card_supp(DiscreteQPositiveMeasure{}) == 0);
  CHECK(card_supp(scalar_measure({{kPi / 2, 1}, {3 * kPi / 2, 1}})) == 2);
  CHECK(card_supp(scalar_measure({{kPi / 2, 1}})) == 1);

  Rng rng(7);
  for (int n = 0; n < 20; ++n) {
    MeasureShape shape;
    shape.s = 1 + rng.index(2);
    shape.pairs = 1 + rng.index(3);
    shape.rank = 1 + rng.index(shape.s);
    shape.min_separation = 0.1;
    const auto nu = random_q_positive_measure(rng, shape);
    CHECK(card_supp(nu) == shape.pairs * shape.rank);
  }
}

TEST_CASE("total mass bound") {
  CHECK(total_mass_bound(scalar_measure({{kPi, 1}})) == doctest::Approx(1));
  CHECK(total_mass_bound(scalar_measure({{kPi / 2, 1}, {3 * kPi / 2, 1}})) == doctest::Approx(2));
  CHECK(total_mass_bound(DiscreteQPositiveMeasure{}) == 0.0);
}

TEST_CASE("random measures: positivity, symmetry, boundedness, embedding") {
  Rng rng(2024);
  for (int m = 0; m < 30; ++m) {
    MeasureShape shape;
    shape.s = 1 + rng.index(2);
    shape.pairs = 1 + rng.index(4);
    const auto nu = random_q_positive_measure(rng, shape);
    REQUIRE(validate_q_positive(nu).empty());
    const double bound = total_mass_bound(nu);
    const HermitianSequence seq = synthesize_sequence(nu, 20);
    for (std::size_t n = 0; n <= 8; ++n) {
      const QMatrix t = build_toeplitz(seq, n);
      CHECK(testing::eigen_min_eigenvalue(t) >= -1e-8 * scale_of(t));
    }
    for (long n = 0; n <= 12; ++n) {
      const QMatrix r = herglotz_synthesize(nu, n);
      CHECK(max_abs_diff(adjoint(herglotz_synthesize(nu, -n)), r) <= 1e-12 * scale_of(r));
      CHECK(max_abs_diff(r, direct_moment(nu, n)) <= 1e-12 * scale_of(r));
    }
    for (long n = 0; n <= 20; ++n) CHECK(operator_norm(seq.at(n)) <= bound * (1 + 1e-12));
  }
}

TEST_CASE("indefinite pairs have exactly card_supp(nu_-) negative squares") {
  Rng rng(99);
  for (std::size_t s : {1u, 2u}) {
    for (std::size_t kappa : {1u, 2u}) {
      for (int rep = 0; rep < 3; ++rep) {
        const auto pair = testing::random_mixed_pair(rng, s, kappa, 2, 0.35);
        REQUIRE(card_supp(pair.minus) == kappa);
        const std::size_t n_max = 8 + 2 * kappa;
        const auto ns = negative_squares(synthesize_indefinite_sequence(pair, n_max), n_max);
        CHECK(ns.kappa == kappa);
        CHECK(ns.stabilized);
        CHECK(ns.profile.back() == kappa);
        for (std::size_t k = 1; k < ns.profile.size(); ++k) CHECK(ns.profile[k] >= ns.profile[k - 1]);
      }
    }
  }
}
