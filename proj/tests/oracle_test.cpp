#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "ajc/oracle.hpp"
#include "ajc/time_grid.hpp"

namespace ajc::oracle {
namespace {

using Index = Eigen::Index;

TEST(BuildHamiltonian, SinglePairCoupling) {
  const TruncatedHamiltonian h = build_hamiltonian({1.0, 0.0, 0.0}, 1);
  ASSERT_EQ(h.dimension(), 4u);
  const auto g0 = static_cast<Index>(ground_index(0));
  const auto e1 = static_cast<Index>(excited_index(1));
  EXPECT_EQ(h.entries(e1, g0), complex(1.0, 0.0));
  EXPECT_EQ(h.entries(g0, e1), complex(1.0, 0.0));
}

TEST(BuildHamiltonian, MatrixElements) {
  const AjcParams p{1.0, 0.7, 0.3};
  const std::size_t cap = 6;
  const TruncatedHamiltonian h = build_hamiltonian(p, cap);
  const double db = p.beta + 2.0 * p.xi;
  for (std::size_t n = 0; n <= cap; ++n) {
    const auto g = static_cast<Index>(ground_index(n));
    const auto e = static_cast<Index>(excited_index(n));
    EXPECT_NEAR(h.entries(g, g).real(), p.xi * (n + 2.0) - db / 2 - p.xi / 2, 1e-15);
    EXPECT_NEAR(h.entries(e, e).real(), p.xi * (n + 1.0) + db / 2 - p.xi / 2, 1e-15);
    if (n < cap) {
      const auto e_up = static_cast<Index>(excited_index(n + 1));
      EXPECT_NEAR(h.entries(e_up, g).real(), std::sqrt(n + 1.0), 1e-15);
    }
  }
  // Only |g,n> <-> |e,n+1> couplings are present.
  for (Index i = 0; i < h.entries.rows(); ++i) {
    for (Index j = 0; j < h.entries.cols(); ++j) {
      if (i == j || h.entries(i, j) == complex{}) continue;
      const Index g = std::min(i, j), e = std::max(i, j);
      EXPECT_EQ(g % 2, 0);
      EXPECT_EQ(e, g + 3) << i << "," << j;
    }
  }
}

TEST(BuildHamiltonian, UncoupledExcitedVacuumAndHermiticity) {
  const TruncatedHamiltonian h = build_hamiltonian({1.0, 1.3, -0.4}, 8);
  const auto e0 = static_cast<Index>(excited_index(0));
  for (Index j = 0; j < h.entries.cols(); ++j) {
    if (j != e0) {
      EXPECT_EQ(h.entries(e0, j), complex{});
      EXPECT_EQ(h.entries(j, e0), complex{});
    }
  }
  EXPECT_EQ((h.entries - h.entries.adjoint()).norm(), 0.0);
}

TEST(SpectralPropagator, EnergiesAreReal) {
  const TruncatedHamiltonian h = build_hamiltonian({1.0, 0.9, 0.0}, 30);
  const SpectralPropagator prop(h);
  Eigen::SelfAdjointEigenSolver<MatrixXc> check(h.entries, Eigen::EigenvaluesOnly);
  Eigen::ComplexEigenSolver<MatrixXc> general(h.entries, false);
  const double scale = h.entries.norm();
  for (Index k = 0; k < general.eigenvalues().size(); ++k) {
    EXPECT_LE(std::abs(general.eigenvalues()(k).imag()), 1e-12 * scale);
  }
  EXPECT_EQ(prop.dimension(), h.dimension());
}

TEST(EvolveOracle, IdentityAtTimeZero) {
  const TruncatedHamiltonian h = build_hamiltonian({1.0, 0.5, 0.0}, 5);
  VectorXc psi = VectorXc::Zero(static_cast<Index>(h.dimension()));
  psi(0) = complex(0.6, 0.0);
  psi(3) = complex(0.0, 0.8);
  const VectorXc out = evolve_oracle(h, psi, 0.0);
  EXPECT_LE((out - psi).norm(), 1e-14);
}

TEST(EvolveOracle, ExcitedVacuumOnlyPicksUpPhase) {
  const TruncatedHamiltonian h = build_hamiltonian({1.0, 0.8, 0.2}, 4);
  VectorXc psi = VectorXc::Zero(static_cast<Index>(h.dimension()));
  psi(static_cast<Index>(excited_index(0))) = 1.0;
  for (double tau : {0.3, 5.0, 41.0}) {
    const VectorXc out = evolve_oracle(h, psi, tau);
    EXPECT_NEAR(std::abs(out(static_cast<Index>(excited_index(0)))), 1.0, 1e-13);
  }
}

TEST(EvolveOracle, VacuumRabiPopulations) {
  const TruncatedHamiltonian h = build_hamiltonian({1.0, 0.0, 0.0}, 3);
  const VectorXc psi0 = ground_product_state(amplitudes(SqueezedStateParams{}, 1e-10), 3);
  for (double tau = 0.0; tau < 10.0; tau += 0.37) {
    const VectorXc psi = evolve_oracle(h, psi0, tau);
    EXPECT_NEAR(std::norm(psi(static_cast<Index>(excited_index(1)))),
                std::pow(std::sin(tau), 2), 1e-13);
    EXPECT_NEAR(std::norm(psi(static_cast<Index>(ground_index(0)))),
                std::pow(std::cos(tau), 2), 1e-13);
  }
}

TEST(EvolveOracle, RejectsUnnormalisedInput) {
  const TruncatedHamiltonian h = build_hamiltonian({1.0, 0.5, 0.0}, 2);
  VectorXc psi = VectorXc::Zero(static_cast<Index>(h.dimension()));
  psi(0) = 2.0;
  EXPECT_THROW(evolve_oracle(h, psi, 1.0), std::invalid_argument);
}

TEST(EvolveOracle, ConservesExcitationNumber) {
  const FockAmplitudes amps = amplitudes(SqueezedStateParams::from_intensity(4.0, 0.6), 1e-12);
  const TruncatedHamiltonian h = build_hamiltonian({1.0, 0.9, 0.0}, amps.n_max() + 2);
  const SpectralPropagator prop(h);
  const VectorXc psi0 = ground_product_state(amps, h.n_cap);
  const double n0 = excitation_expectation(psi0);
  for (double tau = 0.0; tau <= 30.0; tau += 1.3) {
    const VectorXc psi = prop.evolve(psi0, tau);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-10);
    EXPECT_LE(std::abs(excitation_expectation(psi) - n0), 1e-10 * n0);
  }
}

TEST(Compare, SinglePointGridHasNoDeviation) {
  const FockAmplitudes amps = amplitudes(SqueezedStateParams::from_intensity(2.0, 0.5), 1e-12);
  const DeviationReport rep = compare({1.0, 0.9, 0.0}, amps, TimeGrid::single(0.0));
  EXPECT_LE(rep.max_rho_deviation, 1e-14);
  EXPECT_EQ(rep.points, 1u);
}

TEST(Compare, VacuumBothRoutesAnalytic) {
  const DeviationReport rep = compare({1.0, 0.0, 0.0}, amplitudes(SqueezedStateParams{}, 1e-10),
                                      TimeGrid{0.0, 50.0, 501});
  EXPECT_LE(rep.max_rho_deviation, 1e-10);
}

TEST(Compare, SqueezedCoherentFieldAtXi09) {
  const FockAmplitudes amps = amplitudes(SqueezedStateParams::from_intensity(2.0, 0.5), 1e-12);
  const DeviationReport rep = compare({1.0, 0.9, 0.0}, amps, TimeGrid{0.0, 20.0, 201});
  EXPECT_EQ(rep.n_cap, amps.n_max() + 2);
  EXPECT_LE(rep.max_rho_deviation, 1e-8);
  EXPECT_LE(rep.max_norm_deviation, 1e-10);
  EXPECT_LE(rep.max_excitation_drift, 1e-10);
}

TEST(Compare, DetunedAndLargerCap) {
  const FockAmplitudes amps = amplitudes(SqueezedStateParams::from_intensity(6.0, 0.8), 1e-13);
  const DeviationReport rep =
      compare({1.0, 0.4, -1.2}, amps, TimeGrid{0.0, 30.0, 151}, amps.n_max() + 10);
  EXPECT_LE(rep.max_rho_deviation, 1e-8);
}

TEST(Compare, RejectsTooSmallCap) {
  const FockAmplitudes amps = amplitudes(SqueezedStateParams::from_intensity(2.0, 0.5), 1e-12);
  EXPECT_THROW(compare({1.0, 0.9, 0.0}, amps, TimeGrid{}, amps.n_max() + 1),
               std::invalid_argument);
}

}  // namespace
}  // namespace ajc::oracle
