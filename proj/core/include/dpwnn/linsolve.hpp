#pragma once

#include <Eigen/Dense>

namespace dpwnn {

struct DlsqResult {
  Eigen::VectorXcd coeffs;
  int rank = 0;             // retained eigenvalue count
  double lambda_max = 0.0;
  bool zero_matrix = false; // A had no positive spectrum; coeffs is zero
};

// Truncated pseudo-inverse solve of the Hermitian PSD Galerkin system:
// eigendecompose A, invert eigenvalues above truncation*lambda_max, zero the
// rest. The quadratic residual of the returned coefficients never exceeds the
// residual of the zero vector.
DlsqResult dlsq_solve(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& b,
                      double truncation);

}  // namespace dpwnn
