#include "ajc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "ajc/errors.hpp"
#include "ajc/time_grid.hpp"

namespace ajc::oracle {
namespace {

// Field operators on n <= n_cap. The atom basis is (g, e).
MatrixXc annihilation(std::size_t n_cap) {
  const auto dim = static_cast<Eigen::Index>(n_cap + 1);
  MatrixXc a = MatrixXc::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

MatrixXc spin_raising() {
  MatrixXc s = MatrixXc::Zero(2, 2);
  s(1, 0) = 1.0;  // |e><g|
  return s;
}

MatrixXc spin_z_ge() {
  MatrixXc s = MatrixXc::Zero(2, 2);
  s(0, 0) = -0.5;
  s(1, 1) = 0.5;
  return s;
}

}  // namespace

TruncatedHamiltonian build_hamiltonian(const AjcParams& params,
                                       std::size_t n_cap) {
  params.validate();
  const auto field_dim = static_cast<Eigen::Index>(n_cap + 1);
  const MatrixXc id_field = MatrixXc::Identity(field_dim, field_dim);
  const MatrixXc id_atom = MatrixXc::Identity(2, 2);

  const MatrixXc a = annihilation(n_cap);
  const MatrixXc a_dag = a.adjoint();
  // a a^dag = a^dag a + 1 holds exactly; the product of truncated matrices
  // would be wrong in the top Fock state.
  const MatrixXc a_a_dag = a_dag * a + id_field;
  const MatrixXc s_plus = spin_raising();
  const MatrixXc s_minus = s_plus.adjoint();
  const MatrixXc s_z = spin_z_ge();

  // Energies in units of hbar * lambda.
  const double omega = params.xi;
  const double delta_bar = params.beta + 2.0 * params.xi;

  const MatrixXc n_bar = Eigen::kroneckerProduct(a_a_dag, id_atom).eval() +
                         Eigen::kroneckerProduct(id_field, s_minus * s_plus).eval();
  const MatrixXc coupling = Eigen::kroneckerProduct(a, s_minus).eval() +
                            Eigen::kroneckerProduct(a_dag, s_plus).eval();
  const MatrixXc atom_z = Eigen::kroneckerProduct(id_field, s_z).eval();
  const auto dim = 2 * field_dim;

  TruncatedHamiltonian h;
  h.n_cap = n_cap;
  h.entries = omega * n_bar + delta_bar * atom_z + coupling -
              0.5 * omega * MatrixXc::Identity(dim, dim);
  return h;
}

SpectralPropagator::SpectralPropagator(const TruncatedHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(h.entries);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hamiltonian eigendecomposition failed");
  }
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

VectorXc SpectralPropagator::evolve(const VectorXc& initial, double tau) const {
  if (initial.size() != energies_.size()) {
    throw std::invalid_argument("state dimension does not match Hamiltonian");
  }
  VectorXc coeffs = vectors_.adjoint() * initial;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::polar(1.0, -energies_(k) * tau);
  }
  return vectors_ * coeffs;
}

VectorXc evolve_oracle(const TruncatedHamiltonian& h, const VectorXc& initial,
                       double tau) {
  const double norm = initial.squaredNorm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("initial state is not normalised");
  }
  return SpectralPropagator(h).evolve(initial, tau);
}

VectorXc ground_product_state(const FockAmplitudes& amps, std::size_t n_cap) {
  if (amps.n_max() > n_cap) {
    throw std::invalid_argument("n_cap is below the field truncation");
  }
  VectorXc psi = VectorXc::Zero(static_cast<Eigen::Index>(2 * (n_cap + 1)));
  for (std::size_t n = 0; n < amps.size(); ++n) {
    psi(static_cast<Eigen::Index>(ground_index(n))) = amps[n];
  }
  return psi / psi.norm();
}

JointState to_joint_state(const VectorXc& psi, double tau) {
  const auto levels = static_cast<std::size_t>(psi.size() / 2);
  JointState out;
  out.tau = tau;
  out.g_amp.resize(levels);
  out.e_amp.resize(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    out.g_amp[n] = psi(static_cast<Eigen::Index>(ground_index(n)));
    out.e_amp[n] = psi(static_cast<Eigen::Index>(excited_index(n)));
  }
  return out;
}

AtomState reduced_density(const VectorXc& psi) {
  return partial_trace(to_joint_state(psi, 0.0));
}

double excitation_expectation(const VectorXc& psi) {
  return ajc::excitation_expectation(to_joint_state(psi, 0.0));
}

DeviationReport compare(const AjcParams& params, const FockAmplitudes& amps,
                        const TimeGrid& grid, std::optional<std::size_t> n_cap) {
  const std::size_t cap = n_cap.value_or(amps.n_max() + 2);
  if (cap < amps.n_max() + 2) {
    throw std::invalid_argument("oracle n_cap must be at least n_max + 2");
  }
  const AjcEvolution closed(params, amps);
  const SpectralPropagator propagator(build_hamiltonian(params, cap));
  const VectorXc initial = ground_product_state(amps, cap);
  const double excitation0 = excitation_expectation(initial);

  DeviationReport report;
  report.n_cap = cap;
  for (const double tau : grid.points()) {
    const VectorXc psi = propagator.evolve(initial, tau);
    const AtomState lhs = closed.reduced_density(tau);
    const AtomState rhs = reduced_density(psi);

    const double dev = std::max({std::abs(lhs.rho_gg - rhs.rho_gg),
                                 std::abs(lhs.rho_ee - rhs.rho_ee),
                                 std::abs(lhs.rho_ge - rhs.rho_ge)});
    report.max_rho_deviation = std::max(report.max_rho_deviation, dev);
    report.max_norm_deviation =
        std::max(report.max_norm_deviation, std::abs(psi.norm() - 1.0));
    report.max_trace_deviation =
        std::max({report.max_trace_deviation, std::abs(lhs.trace() - 1.0),
                  std::abs(rhs.trace() - 1.0)});
    report.max_excitation_drift =
        std::max(report.max_excitation_drift,
                 std::abs(excitation_expectation(psi) - excitation0) / excitation0);
    ++report.points;
  }
  return report;
}

}  // namespace ajc::oracle
