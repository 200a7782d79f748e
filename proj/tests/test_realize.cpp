#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "qherglotz/measures.hpp"
#include "qherglotz/qlinalg.hpp"
#include "qherglotz/realize.hpp"

using namespace qherglotz;

namespace {

const Quaternion one{1.0};
const Quaternion qj = Quaternion::j();

// (J, W U W^{-1}, W C) for a J-unitary W.
PontryaginRealization conjugated(const PontryaginRealization& r, const QMatrix& w) {
  const QMatrix w_inv = r.J.left(r.J.right(adjoint(w)));
  return {r.J, w * r.U * w_inv, w * r.C};
}

std::vector<long> range(long lo, long hi) {
  std::vector<long> v;
  for (long n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

}  // namespace

TEST_CASE("signature gram") {
  const SignatureGram j = SignatureGram::split(2, 1);
  CHECK(j.dimension() == 3);
  CHECK(j.kappa() == 1);
  const QMatrix m = j.matrix();
  CHECK(adjoint(m) == m);
  CHECK(m * m == QMatrix::identity(3));
  CHECK_THROWS_AS(SignatureGram({1, 0}), ShapeError);
  Rng rng(1);
  const QMatrix x = random_qmatrix(rng, 3, 3);
  CHECK(j.left(x) == m * x);
  CHECK(j.right(x) == x * m);
}

TEST_CASE("moment examples") {
  const PontryaginRealization trivial{SignatureGram::hilbert(2), QMatrix::identity(2), QMatrix::identity(2)};
  for (long n = -3; n <= 3; ++n) CHECK(moment(trivial, n) == QMatrix::identity(2));

  const PontryaginRealization flip{SignatureGram::hilbert(1), QMatrix{{-one}}, QMatrix{{one}}};
  DiscreteQPositiveMeasure delta_pi{1, {{std::numbers::pi, CMatrix{{1.0}}, CMatrix{{0.0}}}}};
  for (long n = -4; n <= 6; ++n) {
    CHECK(moment(flip, n) == QMatrix{{Quaternion{n % 2 == 0 ? 1.0 : -1.0}}});
    CHECK(max_abs_diff(moment(flip, n), herglotz_synthesize(delta_pi, n)) <= 1e-15);
  }

  const PontryaginRealization cancel{SignatureGram::split(1, 1), QMatrix::identity(2), QMatrix{{one}, {one}}};
  for (long n = 0; n <= 4; ++n) CHECK(max_abs(moment(cancel, n)) == 0.0);

  const PontryaginRealization broken{SignatureGram::hilbert(1), QMatrix{{Quaternion{2}}}, QMatrix{{one}}};
  CHECK_THROWS_AS(moment(broken, 1), NotJUnitary);
  const PontryaginRealization bad_shape{SignatureGram::hilbert(2), QMatrix::identity(1), QMatrix{{one}}};
  CHECK_THROWS_AS(moment(bad_shape, 0), ShapeError);
}

TEST_CASE("cayley transform and random J-unitaries") {
  CHECK(cayley_transform(QMatrix(3, 3)) == QMatrix::identity(3));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SignatureGram h = SignatureGram::hilbert(3);
    const QMatrix u = random_j_unitary(h, seed);
    CHECK(max_abs(adjoint(u) * u - QMatrix::identity(3)) <= 1e-9);
    const SignatureGram j = SignatureGram::split(1, 1);
    const QMatrix v = random_j_unitary(j, seed);
    CHECK(j_unitarity_defect(j, v) <= 1e-9 * j_unitarity_scale(v));
    CHECK(random_j_unitary(j, seed) == v);
  }
}

TEST_CASE("moments are Hermitian in n") {
  Rng rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t d = 1 + rng.index(5), s = 1 + rng.index(2);
    std::vector<int> signs(d);
    for (auto& v : signs) v = rng.uniform() < 0.5 ? -1 : 1;
    const SignatureGram jj(signs);
    const PontryaginRealization r{jj, random_j_unitary(jj, rng), random_qmatrix(rng, d, s)};
    for (long n = 0; n <= 10; ++n) {
      const QMatrix a = moment(r, n);
      CHECK(max_abs_diff(adjoint(moment(r, -n)), a) <= 1e-10 * scale_of(a));
    }
  }
}

TEST_CASE("negative squares bound") {
  Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t d = 1 + rng.index(4);
    const SignatureGram h = SignatureGram::hilbert(d);
    const PontryaginRealization r{h, random_j_unitary(h, rng), random_qmatrix(rng, d, 1 + rng.index(2))};
    const auto b = verify_negative_squares_bound(r, 8);
    CHECK(b.kappa_seq == 0);
    CHECK(b.ok);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng local(seed);
    const SignatureGram j = SignatureGram::split(1, 1);
    const PontryaginRealization r{j, random_j_unitary(j, local), random_qmatrix(local, 2, 1)};
    const auto b = verify_negative_squares_bound(r, 10);
    CHECK(b.kappa_seq <= 1);
    CHECK(b.ok);
  }
  const SignatureGram j = SignatureGram::split(2, 2);
  const PontryaginRealization zero_c{j, random_j_unitary(j, rng), QMatrix(4, 1)};
  CHECK(verify_negative_squares_bound(zero_c, 6).kappa_seq == 0);
}

TEST_CASE("coisometry dilation") {
  CHECK(dilate_coisometry(QMatrix{{one}}) == QMatrix::identity(2));
  const QMatrix uj = dilate_coisometry(QMatrix{{qj}});
  CHECK(uj == QMatrix{{-qj, Quaternion{}}, {Quaternion{}, qj}});
  CHECK_THROWS_AS(dilate_coisometry(QMatrix{{one, Quaternion{}}}), ShapeError);
  CHECK_THROWS_AS(dilate_coisometry(QMatrix{{Quaternion{0.5}}}), NotCoisometry);

  Rng rng(9);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t d = 1 + rng.index(4);
    const QMatrix v = random_unitary(rng, d);
    const QMatrix u = dilate_coisometry(v);
    CHECK(max_abs(adjoint(u) * u - QMatrix::identity(2 * d)) <= 1e-9);
    QMatrix un = QMatrix::identity(2 * d), vn = QMatrix::identity(d);
    for (int n = 0; n <= 10; ++n) {
      CHECK(max_abs_diff(un.block(d, d, d, d), vn) <= 1e-9 * scale_of(vn));
      un = un * u;
      vn = vn * v;
    }
  }
}

TEST_CASE("alignment of realizations") {
  Rng rng(11);
  const SignatureGram j = SignatureGram::split(2, 1);
  const PontryaginRealization r1{j, random_j_unitary(j, rng), random_qmatrix(rng, 3, 1)};
  const QMatrix s_same = align_realizations(r1, r1, range(0, 4));
  CHECK(max_abs_diff(s_same, QMatrix::identity(3)) <= 1e-7);

  for (int rep = 0; rep < 10; ++rep) {
    const QMatrix w = random_j_unitary(j, rng);
    const PontryaginRealization r2 = conjugated(r1, w);
    const QMatrix s = align_realizations(r1, r2, range(0, 4));
    CHECK(max_abs_diff(s, w) <= 1e-7 * scale_of(w));
    // Extrapolation to twice the fitted range.
    for (long n = 0; n <= 8; ++n) {
      const QMatrix lhs = s * matrix_power(r1.U, static_cast<unsigned>(n)) * r1.C;
      const QMatrix rhs = matrix_power(r2.U, static_cast<unsigned>(n)) * r2.C;
      CHECK(max_abs_diff(lhs, rhs) <= 1e-6 * scale_of(rhs));
    }
  }

  const PontryaginRealization small{SignatureGram::hilbert(1), QMatrix{{-one}}, QMatrix{{one}}};
  QMatrix u2(2, 2);
  u2(0, 0) = -one;
  u2(1, 1) = one;
  const PontryaginRealization deficient{SignatureGram::hilbert(2), u2, QMatrix{{one}, {Quaternion{}}}};
  CHECK_THROWS_AS(align_realizations(small, deficient, range(0, 4)), SpanDeficient);

  // Equal dimensions, different moments.
  const PontryaginRealization other{j, random_j_unitary(j, rng), random_qmatrix(rng, 3, 1)};
  CHECK_THROWS_AS(align_realizations(r1, other, range(0, 4)), NoUnitaryAlignment);
}
