#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ajc/squeezed_field.hpp"

namespace ajc {

// Anti-Jaynes-Cummings model parameters. hbar = 1, and every time argument
// in this library is the scaled time tau = lambda * t.
//   xi   = omega / lambda      (coupling strength, >= 0)
//   beta = delta / lambda      (JC difference detuning, any real)
struct AjcParams {
  double lambda = 1.0;
  double xi = 0.0;
  double beta = 0.0;

  double omega() const { return xi * lambda; }
  double delta() const { return beta * lambda; }
  // Sum-frequency detuning delta + 2 omega.
  double delta_bar() const { return (beta + 2.0 * xi) * lambda; }

  void validate() const;
};

struct RabiParameters {
  double big_r = 0.0;  // generalised Rabi frequency, units of 1/time
  double c = 0.0;
  double s = 1.0;
  std::size_t n = 0;
};

RabiParameters rabi_parameters(const AjcParams& params, long n);

// Joint atom-field amplitudes:
//   |psi> = sum_n g_amp[n] |g,n> + e_amp[n] |e,n>.
// e_amp carries one more entry than g_amp because |g,n_max> couples to
// |e,n_max+1>.
struct JointState {
  std::vector<complex> g_amp;
  std::vector<complex> e_amp;
  double tau = 0.0;

  double norm() const;
};

// Reduced atomic density matrix. rho_ge = <g|rho|e>, rho_eg = conj(rho_ge).
struct AtomState {
  double rho_gg = 1.0;
  double rho_ee = 0.0;
  complex rho_ge{0.0, 0.0};

  complex rho_eg() const { return std::conj(rho_ge); }
  double trace() const { return rho_gg + rho_ee; }
  double determinant() const { return rho_gg * rho_ee - std::norm(rho_ge); }

  static AtomState ground() { return {}; }
  static AtomState maximally_mixed() { return {0.5, 0.5, {0.0, 0.0}}; }
};

// Closed-form evolution of |g> (x) field. Holds the per-photon Rabi table
// so that repeated evaluation on a time grid only pays for the trig calls.
// The truncated field is renormalised to unit norm on construction.
class AjcEvolution {
 public:
  AjcEvolution(const AjcParams& params, const FockAmplitudes& amps);

  const AjcParams& params() const { return params_; }
  std::size_t n_max() const { return amps_.size() - 1; }
  const std::vector<complex>& normalised_amplitudes() const { return amps_; }

  JointState joint_state(double tau) const;

  // Term-by-term reduced density: populations plus the e^{-+i omega t}
  // weighted coherences.
  AtomState reduced_density(double tau) const;

 private:
  AjcParams params_;
  std::vector<complex> amps_;
  std::vector<double> half_root_;  // R_n / lambda
  std::vector<double> c_;
  std::vector<double> s_;
};

JointState evolve_joint_state(const AjcParams& params,
                              const FockAmplitudes& amps, double tau);

AtomState reduced_density(const AjcParams& params, const FockAmplitudes& amps,
                          double tau);

// Partial trace over the field of |psi><psi|.
AtomState partial_trace(const JointState& state);

// W = rho_ee - rho_gg.
double atomic_inversion(const AtomState& state);

// <a a^dagger + s_- s_+>, i.e. eigenvalue n+2 on |g,n> and n+1 on |e,n>.
double excitation_expectation(const JointState& state);

}  // namespace ajc
