#include "ajc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ajc {
namespace {

constexpr complex kI{0.0, 1.0};

}  // namespace

void AjcParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be finite and > 0");
  }
  if (!(xi >= 0.0) || !std::isfinite(xi)) {
    throw std::invalid_argument("xi must be finite and >= 0");
  }
  if (!std::isfinite(beta)) throw std::invalid_argument("beta must be finite");
}

RabiParameters rabi_parameters(const AjcParams& params, long n) {
  if (n < 0) throw std::invalid_argument("photon index must be >= 0");
  const double b = params.beta + 2.0 * params.xi;
  const double four_np1 = 4.0 * (static_cast<double>(n) + 1.0);
  const double root = std::sqrt(four_np1 + b * b);
  RabiParameters out;
  out.n = static_cast<std::size_t>(n);
  out.big_r = 0.5 * params.lambda * root;
  out.c = b / root;
  out.s = std::sqrt(four_np1) / root;
  return out;
}

double JointState::norm() const {
  double sum = 0.0;
  for (const complex& a : g_amp) sum += std::norm(a);
  for (const complex& a : e_amp) sum += std::norm(a);
  return sum;
}

AjcEvolution::AjcEvolution(const AjcParams& params, const FockAmplitudes& amps)
    : params_(params), amps_(amps.values) {
  params_.validate();
  if (amps_.empty()) throw std::invalid_argument("empty field amplitudes");
  const double norm = amps.retained_norm();
  if (!(norm > 0.0)) throw std::invalid_argument("field amplitudes vanish");
  const double scale = 1.0 / std::sqrt(norm);
  for (complex& s : amps_) s *= scale;

  half_root_.resize(amps_.size());
  c_.resize(amps_.size());
  s_.resize(amps_.size());
  for (std::size_t n = 0; n < amps_.size(); ++n) {
    const RabiParameters rp = rabi_parameters(params_, static_cast<long>(n));
    half_root_[n] = rp.big_r / params_.lambda;
    c_[n] = rp.c;
    s_[n] = rp.s;
  }
}

JointState AjcEvolution::joint_state(double tau) const {
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  const std::size_t size = amps_.size();
  JointState out;
  out.tau = tau;
  out.g_amp.resize(size);
  out.e_amp.assign(size + 1, complex{});
  // With tau = lambda t: omega t = xi tau and R_n t = (R_n / lambda) tau.
  const double xi_tau = params_.xi * tau;
  for (std::size_t n = 0; n < size; ++n) {
    const double dn = static_cast<double>(n);
    const double rt = half_root_[n] * tau;
    const double cs = std::cos(rt);
    const double sn = std::sin(rt);
    out.g_amp[n] = std::polar(1.0, -xi_tau * (dn + 1.0)) * amps_[n] *
                   complex{cs, c_[n] * sn};
    // |e, n+1> is fed by pair n and carries e^{-i omega (n+1) t}.
    out.e_amp[n + 1] = -kI * std::polar(1.0, -xi_tau * (dn + 1.0)) *
                       amps_[n] * s_[n] * sn;
  }
  return out;
}

AtomState AjcEvolution::reduced_density(double tau) const {
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  const std::size_t size = amps_.size();
  double gg = 0.0;
  double ee = 0.0;
  complex ge{0.0, 0.0};

  double prev_sin = 0.0;  // sin(R_{n-1} t)
  for (std::size_t n = 0; n < size; ++n) {
    const double rt = half_root_[n] * tau;
    const double cs = std::cos(rt);
    const double sn = std::sin(rt);
    const double pn = std::norm(amps_[n]);
    gg += pn * (cs * cs + c_[n] * c_[n] * sn * sn);
    // Excited sum reindexed to m = n - 1 so the top pair is not dropped.
    ee += pn * s_[n] * s_[n] * sn * sn;
    if (n > 0) {
      ge += kI * amps_[n] * std::conj(amps_[n - 1]) * s_[n - 1] * prev_sin *
            complex{cs, c_[n] * sn};
    }
    prev_sin = sn;
  }
  ge *= std::polar(1.0, -params_.xi * tau);

  // Rescale by the trace so rounding in the sums does not leak into tr rho.
  const double trace = gg + ee;
  AtomState out;
  out.rho_gg = gg / trace;
  out.rho_ee = ee / trace;
  out.rho_ge = ge / trace;
  return out;
}

JointState evolve_joint_state(const AjcParams& params,
                              const FockAmplitudes& amps, double tau) {
  return AjcEvolution(params, amps).joint_state(tau);
}

AtomState reduced_density(const AjcParams& params, const FockAmplitudes& amps,
                          double tau) {
  return AjcEvolution(params, amps).reduced_density(tau);
}

AtomState partial_trace(const JointState& state) {
  double gg = 0.0;
  double ee = 0.0;
  complex ge{0.0, 0.0};
  for (const complex& a : state.g_amp) gg += std::norm(a);
  for (const complex& a : state.e_amp) ee += std::norm(a);
  const std::size_t shared = std::min(state.g_amp.size(), state.e_amp.size());
  for (std::size_t n = 0; n < shared; ++n) {
    ge += state.g_amp[n] * std::conj(state.e_amp[n]);
  }
  AtomState out;
  out.rho_gg = gg;
  out.rho_ee = ee;
  out.rho_ge = ge;
  return out;
}

double atomic_inversion(const AtomState& state) {
  return state.rho_ee - state.rho_gg;
}

double excitation_expectation(const JointState& state) {
  double sum = 0.0;
  for (std::size_t n = 0; n < state.g_amp.size(); ++n) {
    sum += (static_cast<double>(n) + 2.0) * std::norm(state.g_amp[n]);
  }
  for (std::size_t n = 0; n < state.e_amp.size(); ++n) {
    sum += (static_cast<double>(n) + 1.0) * std::norm(state.e_amp[n]);
  }
  return sum;
}

}  // namespace ajc
