#include "ajc/squeezed_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ajc/errors.hpp"

namespace ajc {
namespace {

void check_tail(double tail_epsilon) {
  if (!(tail_epsilon > 0.0 && tail_epsilon < 1.0)) {
    throw std::invalid_argument("tail_epsilon must lie in (0, 1), got " +
                                std::to_string(tail_epsilon));
  }
}

// Coefficients of (mu a + nu a^dag) |psi> = gamma |psi>.
struct Recurrence {
  double mu;
  complex nu;
  complex gamma;
  complex seed;
};

Recurrence make_recurrence(const SqueezedStateParams& p) {
  const complex phase = std::polar(1.0, p.theta);
  const double ch = std::cosh(p.r);
  const double th = std::tanh(p.r);
  Recurrence rec;
  rec.mu = ch;
  rec.nu = phase * std::sinh(p.r);
  rec.gamma = p.alpha * ch + std::conj(p.alpha) * rec.nu;
  const complex alpha_conj = std::conj(p.alpha);
  rec.seed = std::exp(-0.5 * std::norm(p.alpha) -
                      0.5 * alpha_conj * alpha_conj * phase * th) /
             std::sqrt(ch);
  return rec;
}

// Generates amplitudes until stop(n, cumulative) says so or the cap is hit.
template <typename Stop>
FockAmplitudes run_recurrence(const SqueezedStateParams& p, std::size_t cap,
                              Stop stop) {
  FockAmplitudes out;
  double cumulative = 0.0;
  auto push = [&](complex s) {
    out.values.push_back(s);
    cumulative += std::norm(s);
  };

  if (p.r == 0.0) {
    push(std::exp(-0.5 * std::norm(p.alpha)));
    while (!stop(out.values.size() - 1, cumulative)) {
      const std::size_t n = out.values.size() - 1;
      if (n >= cap) throw TruncationError(cap, 1.0 - cumulative);
      push(out.values[n] * p.alpha / std::sqrt(static_cast<double>(n + 1)));
    }
  } else {
    const Recurrence rec = make_recurrence(p);
    push(rec.seed);
    while (!stop(out.values.size() - 1, cumulative)) {
      const std::size_t n = out.values.size() - 1;
      if (n >= cap) throw TruncationError(cap, 1.0 - cumulative);
      const complex prev = n > 0 ? out.values[n - 1] : complex{};
      const double dn = static_cast<double>(n);
      const complex next =
          (rec.gamma * out.values[n] - rec.nu * std::sqrt(dn) * prev) /
          (rec.mu * std::sqrt(dn + 1.0));
      push(next);
    }
  }
  out.tail_bound = std::max(0.0, 1.0 - cumulative);
  return out;
}

}  // namespace

SqueezedStateParams SqueezedStateParams::from_intensity(double alpha_sq,
                                                        double r,
                                                        double theta) {
  if (!(alpha_sq >= 0.0)) {
    throw std::invalid_argument("alpha_sq must be >= 0");
  }
  return {complex{std::sqrt(alpha_sq), 0.0}, r, theta};
}

void SqueezedStateParams::validate() const {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("squeeze parameter r must be finite and >= 0");
  }
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) ||
      !std::isfinite(theta)) {
    throw std::invalid_argument("alpha and theta must be finite");
  }
}

double FockAmplitudes::retained_norm() const {
  double sum = 0.0;
  for (const complex& s : values) sum += std::norm(s);
  return sum;
}

complex amplitude_hermite(const SqueezedStateParams& params, long n) {
  params.validate();
  if (n < 0) throw std::invalid_argument("photon index must be >= 0");
  if (params.r <= 0.0) {
    throw std::invalid_argument(
        "Hermite form is singular at r = 0; use the coherent branch");
  }
  const complex phase = std::polar(1.0, params.theta);
  const Recurrence rec = make_recurrence(params);

  // S_n = S_0 (e^{i theta} tanh r / 2)^{n/2} H_n(x) / sqrt(n!)
  //     = S_0 (e^{i theta} tanh r)^{n/2} h_n(x)
  // with x = gamma / sqrt(e^{i theta} sinh 2r). Any square-root branch works
  // because H_n has parity (-1)^n.
  const complex x = rec.gamma / std::sqrt(phase * std::sinh(2.0 * params.r));
  const complex q = std::sqrt(phase * std::tanh(params.r));

  complex h_prev{0.0, 0.0};
  complex h{1.0, 0.0};  // h_0
  complex weight{1.0, 0.0};
  for (long k = 0; k < n; ++k) {
    const double dk = static_cast<double>(k);
    const complex h_next = x * std::sqrt(2.0 / (dk + 1.0)) * h -
                           std::sqrt(dk / (dk + 1.0)) * h_prev;
    h_prev = h;
    h = h_next;
    weight *= q;
  }
  return rec.seed * weight * h;
}

FockAmplitudes amplitudes(const SqueezedStateParams& params,
                          double tail_epsilon, std::size_t hard_cap) {
  params.validate();
  check_tail(tail_epsilon);
  return run_recurrence(params, hard_cap, [&](std::size_t, double cumulative) {
    return 1.0 - cumulative <= tail_epsilon;
  });
}

FockAmplitudes amplitudes_to(const SqueezedStateParams& params,
                             std::size_t n_max) {
  params.validate();
  return run_recurrence(params, n_max,
                        [&](std::size_t n, double) { return n >= n_max; });
}

std::vector<double> photon_distribution(const FockAmplitudes& amps) {
  std::vector<double> p;
  p.reserve(amps.size());
  for (const complex& s : amps.values) p.push_back(std::norm(s));
  return p;
}

double mean_photon_number(const SqueezedStateParams& params) {
  const double sh = std::sinh(params.r);
  return std::norm(params.alpha) + sh * sh;
}

std::size_t choose_truncation(const SqueezedStateParams& params,
                              double tail_epsilon, std::size_t hard_cap) {
  return amplitudes(params, tail_epsilon, hard_cap).n_max();
}

}  // namespace ajc
