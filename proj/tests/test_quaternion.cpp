#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vt/quaternion.hpp"
#include "vt/rng.hpp"
#include "vt/sl2c.hpp"

using namespace vt;

namespace {
Quaterniond random_quat(Rng& rng, double lo = -2.0, double hi = 2.0) {
  return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}
}  // namespace

TEST_CASE("defining relations of the Hamilton product") {
  const Quaterniond one{1, 0, 0, 0}, i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};

  auto ij = quat_mul(i, j);
  CHECK(ij.a == 0.0);
  CHECK(ij.d == 1.0);  // i j = k

  auto ii = quat_mul(i, i);
  CHECK(ii.a == -1.0);
  CHECK(ii.b == 0.0);

  auto ji = quat_mul(j, i);
  CHECK(ji.d == -1.0);  // j i = -k

  auto id = quat_mul(one, k);
  CHECK(id.d == 1.0);

  // ((1+i)/sqrt(2))^2 = i
  const double r = 1.0 / std::sqrt(2.0);
  const Quaterniond h{r, r, 0, 0};
  const Quaterniond sq = quat_mul(h, h);
  CHECK(std::abs(sq.a) < 1e-15);
  CHECK(sq.b == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(sq.c) < 1e-15);
  CHECK(std::abs(sq.d) < 1e-15);
}

TEST_CASE("matrix representation of the basis quaternions") {
  CHECK((quat_to_matrix(Quaterniond{1, 0, 0, 0}) - basis_matrix(BasisOp::One)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((quat_to_matrix(Quaterniond{0, 1, 0, 0}) - basis_matrix(BasisOp::I)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((quat_to_matrix(Quaterniond{0, 0, 1, 0}) - basis_matrix(BasisOp::J)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((quat_to_matrix(Quaterniond{0, 0, 0, 1}) - basis_matrix(BasisOp::K)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Hopf angles reach the fractional generators") {
  const double th = 0.73;
  auto q1 = hopf_to_quat(HopfAnglesd{th, 0.0, 1.9});  // cos th + i sin th
  CHECK(q1.a == doctest::Approx(std::cos(th)).epsilon(1e-15));
  CHECK(q1.b == doctest::Approx(std::sin(th)).epsilon(1e-15));
  CHECK(q1.c == 0.0);
  CHECK(q1.d == 0.0);

  auto q2 = hopf_to_quat(HopfAnglesd{0.0, th, 0.0});  // cos th + j sin th
  CHECK(q2.a == doctest::Approx(std::cos(th)).epsilon(1e-15));
  CHECK(q2.c == doctest::Approx(std::sin(th)).epsilon(1e-15));

  auto q3 = hopf_to_quat(HopfAnglesd{0.0, th, kPi / 2.0});  // cos th + k sin th
  CHECK(q3.a == doctest::Approx(std::cos(th)).epsilon(1e-15));
  CHECK(std::abs(q3.c) < 1e-15);
  CHECK(q3.d == doctest::Approx(std::sin(th)).epsilon(1e-15));
}

TEST_CASE("hopf_to_matrix special points and agreement with the quaternion route") {
  CHECK((hopf_to_matrix(HopfAnglesd{0.0, kPi / 2, 0.0}) - basis_matrix(BasisOp::J)).cwiseAbs().maxCoeff() <
        1e-15);
  CHECK((hopf_to_matrix(HopfAnglesd{kPi / 2, 0.0, 0.0}) - basis_matrix(BasisOp::I)).cwiseAbs().maxCoeff() <
        1e-15);
  CHECK((hopf_to_matrix(HopfAnglesd{0.0, kPi / 2, kPi / 2}) - basis_matrix(BasisOp::K)).cwiseAbs().maxCoeff() <
        1e-15);

  Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    const HopfAnglesd h{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const Sl2cMatrixd direct = hopf_to_matrix(h);
    const Sl2cMatrixd via_quat = quat_to_matrix(hopf_to_quat(h));
    CHECK((direct - via_quat).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(is_unit_det(direct));
  }
}

TEST_CASE("matrix product and inverse") {
  const Sl2cMatrixd I = basis_matrix(BasisOp::I), J = basis_matrix(BasisOp::J),
                    K = basis_matrix(BasisOp::K), One = basis_matrix(BasisOp::One);
  CHECK((matrix_mul(I, J) - K).cwiseAbs().maxCoeff() == 0.0);
  CHECK((matrix_mul(J, J) + One).cwiseAbs().maxCoeff() == 0.0);

  Rng rng(5);
  const Sl2cMatrixd m = hopf_to_matrix(HopfAnglesd{0.4, 1.1, -0.2});
  CHECK((matrix_mul(One, m) - m).cwiseAbs().maxCoeff() == 0.0);

  Sl2cMatrixd jinv;
  jinv << 0, -1, 1, 0;
  CHECK((matrix_inverse(J) - jinv).cwiseAbs().maxCoeff() == 0.0);
  CHECK((matrix_inverse(One) - One).cwiseAbs().maxCoeff() == 0.0);

  // inverse of a Hopf matrix flips xi1 and eta
  const Sl2cMatrixd v = hopf_to_matrix(HopfAnglesd{0.3, 0.7, 1.1});
  const Sl2cMatrixd vinv = hopf_to_matrix(HopfAnglesd{-0.3, -0.7, 1.1});
  CHECK((matrix_inverse(v) - vinv).cwiseAbs().maxCoeff() < 1e-12);

  for (int it = 0; it < 100; ++it) {
    const Sl2cMatrixd w = hopf_to_matrix(HopfAnglesd{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)});
    CHECK((matrix_inverse(matrix_inverse(w)) - w).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((matrix_mul(w, matrix_inverse(w)) - One).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("composition table matches the pinned sixteen entries") {
  const auto table = composition_table();
  const char* expected[4][4] = {{"1", "I", "J", "K"},
                                {"I", "P", "K", "PJ"},
                                {"J", "PK", "P", "I"},
                                {"K", "J", "PI", "P"}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(table[r][c].label() == expected[r][c]);
}

TEST_CASE("representation is a homomorphism: 1000 random pairs") {
  Rng rng(2024);
  double worst = 0.0;
  for (int it = 0; it < 1000; ++it) {
    const Quaterniond p = random_quat(rng), q = random_quat(rng);
    const Sl2cMatrixd lhs = quat_to_matrix(quat_mul(p, q));
    const Sl2cMatrixd rhs = matrix_mul(quat_to_matrix(p), quat_to_matrix(q));
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("norm squared equals the determinant of the representation") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    const Quaterniond q = random_quat(rng);
    const double n2 = quat_norm(q) * quat_norm(q);
    CHECK(std::abs(n2 - det2(quat_to_matrix(q))) <= 1e-12);
  }
}

TEST_CASE("Hopf round trip and pole behavior") {
  Rng rng(13);
  for (int it = 0; it < 200; ++it) {
    const HopfAnglesd h{rng.uniform(-3, 3), rng.uniform(0.1, kPi / 2 - 0.1), rng.uniform(-3, 3)};
    const Quaterniond q = hopf_to_quat(h);
    CHECK(is_versor(q));
    const auto rec = hopf_from_quat(q);
    CHECK(rec.xi1_defined);
    CHECK(rec.xi2_defined);
    const Quaterniond back = hopf_to_quat(rec.angles);
    CHECK(std::abs(back.a - q.a) < 1e-12);
    CHECK(std::abs(back.b - q.b) < 1e-12);
    CHECK(std::abs(back.c - q.c) < 1e-12);
    CHECK(std::abs(back.d - q.d) < 1e-12);
  }

  // sin(eta) = 0: xi2 is free and flagged
  const auto rec0 = hopf_from_quat(hopf_to_quat(HopfAnglesd{0.8, 0.0, 2.2}));
  CHECK(rec0.xi1_defined);
  CHECK_FALSE(rec0.xi2_defined);
  CHECK(rec0.angles.xi2 == 0.0);

  // cos(eta) = 0: xi1 is free and flagged
  const auto rec1 = hopf_from_quat(hopf_to_quat(HopfAnglesd{0.8, kPi / 2, 2.2}));
  CHECK_FALSE(rec1.xi1_defined);
  CHECK(rec1.angles.xi1 == 0.0);

  CHECK_THROWS_AS(hopf_from_quat(Quaterniond{2, 0, 0, 0}), std::invalid_argument);
}
