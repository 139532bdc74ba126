#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ajc/errors.hpp"
#include "ajc/nonclassicality.hpp"
#include "reference_formulas.hpp"

namespace ajc {
namespace {

AtomState equatorial() { return {0.5, 0.5, {0.5, 0.0}}; }

void expect_matrix_near(const Matrix2c& a, const Matrix2c& b, double tol) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(a(i, j) - b(i, j)), 0.0, tol);
}

TEST(BlochVector, BasisStates) {
  EXPECT_EQ(bloch_vector(AtomState::ground()), (BlochVector{0.0, 0.0, -1.0}));
  EXPECT_EQ(bloch_vector(AtomState::maximally_mixed()), (BlochVector{0.0, 0.0, 0.0}));
  EXPECT_EQ(bloch_vector(equatorial()), (BlochVector{1.0, 0.0, 0.0}));
}

TEST(BlochVector, PauliReconstruction) {
  std::mt19937_64 rng(11);
  Matrix2c sx, sy, sz;
  sx << 0.0, 1.0, 1.0, 0.0;
  sy << 0.0, complex(0.0, -1.0), complex(0.0, 1.0), 0.0;
  sz << 1.0, 0.0, 0.0, -1.0;
  for (int i = 0; i < 1000; ++i) {
    const AtomState s = reference::random_state(rng);
    const BlochVector r = bloch_vector(s);
    const Matrix2c rebuilt =
        0.5 * (Matrix2c::Identity() + r.x * sx + r.y * sy + r.z * sz);
    expect_matrix_near(rebuilt, density_matrix(s), 1e-14);
  }
}

TEST(Sqrt2x2, KnownRoots) {
  expect_matrix_near(sqrt_2x2(AtomState::maximally_mixed()),
                     Matrix2c::Identity() / std::sqrt(2.0), 1e-15);
  expect_matrix_near(sqrt_2x2(equatorial()), density_matrix(equatorial()), 1e-15);
  expect_matrix_near(sqrt_2x2(AtomState::ground()), density_matrix(AtomState::ground()), 1e-15);

  const AtomState diag{0.25, 0.75, {0.0, 0.0}};  // diag(3/4, 1/4) in (e, g)
  Matrix2c expected = Matrix2c::Zero();
  expected(0, 0) = std::sqrt(3.0) / 2.0;
  expected(1, 1) = 0.5;
  expect_matrix_near(sqrt_2x2(diag), expected, 1e-15);
}

TEST(Sqrt2x2, SquaresBackAndIsHermitian) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const AtomState s = reference::random_state(rng);
    const Matrix2c m = sqrt_2x2(s);
    expect_matrix_near(m * m, density_matrix(s), 1e-12);
    expect_matrix_near(m, m.adjoint(), 1e-15);
  }
}

TEST(Sqrt2x2, ClipsRoundingAndRejectsCorruption) {
  const AtomState slightly_over{0.0, 1.0, {1e-7, 0.0}};  // eigenvalue ~ -1e-14
  EXPECT_NO_THROW(sqrt_2x2(slightly_over));
  const AtomState broken{0.5, 0.5, {0.6, 0.0}};  // eigenvalue -0.1
  EXPECT_THROW(sqrt_2x2(broken), NumericalError);
}

TEST(SkewInformation, ReferenceStates) {
  EXPECT_NEAR(skew_information(AtomState::maximally_mixed()), 0.0, 1e-16);
  EXPECT_NEAR(skew_information(AtomState::ground()), 0.0, 1e-16);
  EXPECT_NEAR(skew_information(equatorial()), 0.25, 1e-15);
}

TEST(SkewInformation, CommutatorRouteMatchesBlochForm) {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 100000; ++i) {
    const AtomState s = reference::random_state(rng);
    const double via_matrix = skew_information(s);
    const double via_bloch = skew_information_bloch(bloch_vector(s));
    ASSERT_NEAR(via_matrix, via_bloch, 1e-12) << i;
    ASSERT_GE(via_bloch, 0.0);
    ASSERT_LE(via_bloch, 0.25 + 1e-15);
  }
}

TEST(SkewInformation, VanishesOnDiagonalStates) {
  for (double z = -1.0; z <= 1.0; z += 0.05) {
    const AtomState s = from_bloch({0.0, 0.0, z});
    EXPECT_NEAR(skew_information(s), 0.0, 1e-14);
  }
}

TEST(SpinQuantifier, Limits) {
  EXPECT_DOUBLE_EQ(spin_quantifier(AtomState::ground()), 0.5);
  EXPECT_DOUBLE_EQ(spin_quantifier(equatorial()), 0.5);
  EXPECT_EQ(spin_quantifier(AtomState::maximally_mixed()), 0.0);
  const BlochVector r{0.6, 0.0, 0.0};
  EXPECT_NEAR(spin_quantifier(r), 0.1, 1e-15);
  EXPECT_NEAR(spin_quantifier_spectral(from_bloch(r)), 0.1, 1e-15);
}

TEST(SpinQuantifier, BlochAndSpectralRoutesAgree) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 20000; ++i) {
    const AtomState s = reference::random_state(rng);
    const double n = spin_quantifier(s);
    ASSERT_NEAR(n, spin_quantifier_spectral(s), 1e-12);
    ASSERT_GE(n, 0.0);
    ASSERT_LE(n, 0.5);
  }
}

TEST(SpinQuantifier, StrictlyIncreasingInBlochLength) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const BlochVector dir = bloch_vector(reference::random_state(rng));
    const double len = dir.norm();
    double previous = -1.0;
    for (int k = 1; k <= 20; ++k) {
      const double scale = 0.05 * k / len;
      const double n = spin_quantifier(BlochVector{dir.x * scale, dir.y * scale, dir.z * scale});
      EXPECT_GT(n, previous);
      previous = n;
    }
  }
}

TEST(SpinQuantifier, ClampsRadicandAboveUnitLength) {
  EXPECT_DOUBLE_EQ(spin_quantifier(BlochVector{0.0, 0.0, 1.0 + 1e-13}), 0.5);
}

TEST(Purity, Values) {
  EXPECT_DOUBLE_EQ(purity(equatorial()), 1.0);
  EXPECT_DOUBLE_EQ(purity(AtomState::maximally_mixed()), 0.5);
  EXPECT_NEAR(purity(from_bloch({0.0, 0.6, 0.0})), 0.68, 1e-15);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const AtomState s = reference::random_state(rng);
    const Matrix2c rho = density_matrix(s);
    EXPECT_NEAR(purity(s), (rho * rho).trace().real(), 1e-14);
  }
}

}  // namespace
}  // namespace ajc
