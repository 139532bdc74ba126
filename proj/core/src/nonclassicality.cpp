#include "ajc/nonclassicality.hpp"

#include <algorithm>
#include <cmath>

#include "ajc/errors.hpp"

namespace ajc {
namespace {

constexpr double kNegativeEigenvalueLimit = -1e-9;

// sqrt(1 - |r|^2) with the radicand clamped at zero.
double purity_root(double r_squared) {
  return std::sqrt(std::max(0.0, 1.0 - r_squared));
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(norm_squared()); }

BlochVector bloch_vector(const AtomState& state) {
  return {2.0 * state.rho_ge.real(), 2.0 * state.rho_ge.imag(),
          state.rho_ee - state.rho_gg};
}

AtomState from_bloch(const BlochVector& r) {
  AtomState out;
  out.rho_ee = 0.5 * (1.0 + r.z);
  out.rho_gg = 0.5 * (1.0 - r.z);
  out.rho_ge = complex{0.5 * r.x, 0.5 * r.y};
  return out;
}

Matrix2c density_matrix(const AtomState& state) {
  Matrix2c m;
  m << complex{state.rho_ee, 0.0}, state.rho_eg(), state.rho_ge,
      complex{state.rho_gg, 0.0};
  return m;
}

Matrix2c spin_z() {
  Matrix2c m;
  m << complex{0.5, 0.0}, complex{}, complex{}, complex{-0.5, 0.0};
  return m;
}

std::pair<double, double> eigenvalues(const AtomState& state) {
  const double half_trace = 0.5 * (state.rho_gg + state.rho_ee);
  const double half_gap = 0.5 * (state.rho_ee - state.rho_gg);
  const double radius = std::sqrt(half_gap * half_gap + std::norm(state.rho_ge));
  return {half_trace - radius, half_trace + radius};
}

Matrix2c sqrt_2x2(const AtomState& state) {
  auto [lo, hi] = eigenvalues(state);
  if (lo < kNegativeEigenvalueLimit) {
    throw NumericalError("density matrix has eigenvalue " + std::to_string(lo));
  }
  lo = std::max(lo, 0.0);
  hi = std::max(hi, 0.0);
  const double root_lo = std::sqrt(lo);
  const double root_hi = std::sqrt(hi);
  const Matrix2c identity = Matrix2c::Identity();
  if (root_hi + root_lo == 0.0) return Matrix2c::Zero();
  // sqrt(l_lo) P_lo + sqrt(l_hi) P_hi with P_hi = (rho - l_lo) / (l_hi - l_lo);
  // the gap cancels against sqrt(l_hi) - sqrt(l_lo).
  return root_lo * identity +
         (density_matrix(state) - lo * identity) / (root_hi + root_lo);
}

double skew_information(const AtomState& state) {
  const Matrix2c root = sqrt_2x2(state);
  const Matrix2c sz = spin_z();
  const Matrix2c commutator = root * sz - sz * root;
  return -0.5 * (commutator * commutator).trace().real();
}

double skew_information_bloch(const BlochVector& r) {
  // (1 - sqrt(1 - r^2)) / r^2 == 1 / (1 + sqrt(1 - r^2)), finite at r = 0.
  const double transverse = r.x * r.x + r.y * r.y;
  return 0.25 * transverse / (1.0 + purity_root(r.norm_squared()));
}

double spin_quantifier(const BlochVector& r) {
  return 0.5 * (1.0 - purity_root(r.norm_squared()));
}

double spin_quantifier(const AtomState& state) {
  return spin_quantifier(bloch_vector(state));
}

double spin_quantifier_spectral(const AtomState& state) {
  const auto [lo, hi] = eigenvalues(state);
  return 0.5 * (1.0 - 2.0 * std::sqrt(std::max(0.0, lo) * std::max(0.0, hi)));
}

double purity(const AtomState& state) {
  return 0.5 * (1.0 + bloch_vector(state).norm_squared());
}

}  // namespace ajc
