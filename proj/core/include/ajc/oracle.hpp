#pragma once

#include <cstddef>
#include <optional>

#include <Eigen/Core>

#include "ajc/dynamics.hpp"
#include "ajc/squeezed_field.hpp"

namespace ajc {

struct TimeGrid;

namespace oracle {

using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;

// Basis index for |g,n> and |e,n>; the field index is the slow one.
constexpr std::size_t ground_index(std::size_t n) { return 2 * n; }
constexpr std::size_t excited_index(std::size_t n) { return 2 * n + 1; }

// Dense AJC Hamiltonian on n <= n_cap, in units of hbar * lambda.
struct TruncatedHamiltonian {
  std::size_t n_cap = 0;
  MatrixXc entries;

  std::size_t dimension() const { return 2 * (n_cap + 1); }
};

// Assembled from Kronecker products of the truncated field operators with the
// spin-1/2 operators:
//   H = omega Nbar + delta_bar s_z + lambda (a s_- + a^dag s_+) - omega / 2.
TruncatedHamiltonian build_hamiltonian(const AjcParams& params,
                                       std::size_t n_cap);

// One-time Hermitian eigendecomposition; evolve() is then a pure read and
// may be called concurrently.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const TruncatedHamiltonian& h);

  std::size_t dimension() const {
    return static_cast<std::size_t>(energies_.size());
  }
  const Eigen::VectorXd& energies() const { return energies_; }

  // exp(-i H tau / lambda) applied to the initial vector.
  VectorXc evolve(const VectorXc& initial, double tau) const;

 private:
  Eigen::VectorXd energies_;
  MatrixXc vectors_;
};

VectorXc evolve_oracle(const TruncatedHamiltonian& h, const VectorXc& initial,
                       double tau);

// |g> (x) sum_n S_n |n>, normalised, embedded into the n_cap basis.
VectorXc ground_product_state(const FockAmplitudes& amps, std::size_t n_cap);

JointState to_joint_state(const VectorXc& psi, double tau);
AtomState reduced_density(const VectorXc& psi);
double excitation_expectation(const VectorXc& psi);

struct DeviationReport {
  double max_rho_deviation = 0.0;   // entrywise |rho_closed - rho_oracle|
  double max_norm_deviation = 0.0;  // | ||psi|| - 1 | on the oracle side
  double max_trace_deviation = 0.0; // |tr rho - 1| on either side
  double max_excitation_drift = 0.0;  // relative, oracle side
  std::size_t n_cap = 0;
  std::size_t points = 0;
};

// Closed-form reduced density against the dense propagator over a grid.
// n_cap defaults to amps.n_max() + 2; smaller values are rejected.
DeviationReport compare(const AjcParams& params, const FockAmplitudes& amps,
                        const TimeGrid& grid,
                        std::optional<std::size_t> n_cap = std::nullopt);

}  // namespace oracle
}  // namespace ajc
