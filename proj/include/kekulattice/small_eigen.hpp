#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

namespace kekulattice {

using Complex = std::complex<double>;
using Mat3c = Eigen::Matrix3cd;

/// Invariants of a 3x3 Hermitian matrix M, chi(x) = x^3 - trace x^2 + minors x - det.
///
/// spread = trace^2 - 3 minors is formed from the entries directly
/// (half the summed squared diagonal differences plus three times the squared
/// off-diagonal moduli), so it never suffers cancellation.
struct HermitianCubic {
  double trace = 0.0;
  double minors = 0.0;
  double det = 0.0;
  double spread = 0.0;
};

HermitianCubic hermitian3_invariants(const Mat3c& m);

// Ascending eigenvalues of a Hermitian 3x3 matrix. Uses the trigonometric
// root formula and falls back to Jacobi rotations when the discriminant is
// within 1e-12 (relative) of a repeated root.
std::array<double, 3> hermitian3_eigenvalues(const Mat3c& m);

// Cyclic Jacobi on the 6x6 real embedding [[Re, -Im], [Im, Re]].
std::array<double, 3> hermitian3_eigenvalues_jacobi(const Mat3c& m);

// Ascending singular values of a general complex 3x3 matrix, as square roots
// of the eigenvalues of A*A.
std::array<double, 3> singular_values3(const Mat3c& a);

// Eigenvalues of a real symmetric matrix by cyclic Jacobi, ascending.
Eigen::VectorXd symmetric_jacobi_eigenvalues(Eigen::MatrixXd m);

}  // namespace kekulattice
