#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ajc {

using complex = std::complex<double>;

inline constexpr double kDefaultTailEpsilon = 1e-10;
inline constexpr std::size_t kDefaultPhotonCap = 4096;

// Displaced squeezed vacuum. alpha is the coherent amplitude, r >= 0 the
// squeeze magnitude and theta the squeeze phase. Only real alpha with
// theta = 0 is covered by the reference checks.
struct SqueezedStateParams {
  complex alpha{0.0, 0.0};
  double r = 0.0;
  double theta = 0.0;

  static SqueezedStateParams from_intensity(double alpha_sq, double r,
                                            double theta = 0.0);

  void validate() const;
};

// Fock amplitudes S_0..S_{n_max} of a truncated field state.
// tail_bound is the admitted probability mass beyond n_max:
//   0 <= 1 - sum |S_n|^2 <= tail_bound.
struct FockAmplitudes {
  std::vector<complex> values;
  double tail_bound = 0.0;

  std::size_t n_max() const { return values.empty() ? 0 : values.size() - 1; }
  std::size_t size() const { return values.size(); }
  const complex& operator[](std::size_t n) const { return values[n]; }

  // sum_n |S_n|^2 over the retained amplitudes
  double retained_norm() const;
};

// S_n from the Hermite closed form, evaluated with the normalised Hermite
// functions h_n = H_n / sqrt(2^n n!) so that nothing overflows for n in the
// hundreds. Requires r > 0; the r = 0 coherent limit goes through
// amplitudes(). Throws std::invalid_argument for r <= 0 or negative n.
complex amplitude_hermite(const SqueezedStateParams& params, long n);

// Production amplitudes from the three-term recurrence
//   mu sqrt(n+1) S_{n+1} = gamma S_n - nu sqrt(n) S_{n-1},
// seeded with the n = 0 Hermite term. Stops at the first n_max whose
// cumulative probability reaches 1 - tail_epsilon. Throws TruncationError
// when that would need more than hard_cap photons.
FockAmplitudes amplitudes(const SqueezedStateParams& params,
                          double tail_epsilon = kDefaultTailEpsilon,
                          std::size_t hard_cap = kDefaultPhotonCap);

// Same recurrence, but truncated at a fixed n_max regardless of the tail.
FockAmplitudes amplitudes_to(const SqueezedStateParams& params,
                             std::size_t n_max);

// P(n) = |S_n|^2.
std::vector<double> photon_distribution(const FockAmplitudes& amps);

// |alpha|^2 + sinh^2 r.
double mean_photon_number(const SqueezedStateParams& params);

// Smallest N whose cumulative photon probability is >= 1 - tail_epsilon.
std::size_t choose_truncation(const SqueezedStateParams& params,
                              double tail_epsilon = kDefaultTailEpsilon,
                              std::size_t hard_cap = kDefaultPhotonCap);

}  // namespace ajc
