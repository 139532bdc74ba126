#pragma once

#include <utility>

#include <Eigen/Core>

#include "ajc/dynamics.hpp"

namespace ajc {

// rho = (1 + r . sigma) / 2 with sigma_z = diag(+1, -1) in the (e, g) basis.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm_squared() const { return x * x + y * y + z * z; }
  double norm() const;

  bool operator==(const BlochVector&) const = default;
};

// Matrices below are ordered (e, g): row/column 0 is |e>.
using Matrix2c = Eigen::Matrix2cd;

BlochVector bloch_vector(const AtomState& state);
AtomState from_bloch(const BlochVector& r);

Matrix2c density_matrix(const AtomState& state);
Matrix2c spin_z();

// Ascending eigenvalues of the 2x2 density matrix.
std::pair<double, double> eigenvalues(const AtomState& state);

// Principal square root by spectral decomposition. Eigenvalues in
// [-1e-9, 0) are clipped to zero; anything more negative throws
// NumericalError.
Matrix2c sqrt_2x2(const AtomState& state);

// Wigner-Yanase skew information -1/2 tr([sqrt(rho), s_z]^2), evaluated
// with explicit matrices.
double skew_information(const AtomState& state);

// The same quantity from the Bloch vector:
//   (r_x^2 + r_y^2) (1 - sqrt(1 - |r|^2)) / (4 |r|^2).
double skew_information_bloch(const BlochVector& r);

// N = (1 - sqrt(1 - |r|^2)) / 2, in [0, 1/2].
double spin_quantifier(const AtomState& state);
double spin_quantifier(const BlochVector& r);

// (1 - 2 sqrt(l1 l2)) / 2 from the eigenvalues; agrees with spin_quantifier.
double spin_quantifier_spectral(const AtomState& state);

// tr rho^2 = (1 + |r|^2) / 2.
double purity(const AtomState& state);

}  // namespace ajc
