#pragma once

#include "exlasso/types.hpp"

namespace exlasso {

/// Lower-triangular L with L L^T = A for symmetric positive definite A.
/// One jitter retry (1e-12 * trace(A)/p on the diagonal) before throwing
/// NotPositiveDefinite; near-singular covariance matrices pass on the retry.
Matrix cholesky_factor(const Matrix& a);

/// Largest eigenvalue of a symmetric PSD matrix by power iteration.
/// Stops when the Rayleigh quotient change drops below 1e-10 relative,
/// then inflates the result by (1 + 1e-10) so 1/L is always a valid
/// gradient step. Throws NonConvergence after 10000 iterations.
double largest_eigenvalue(const Matrix& a);

/// Minimum-norm least-squares solve A^+ b for symmetric PSD A.
/// Eigenvalues below 1e-10 * lambda_max are treated as zero.
Vector pinv_solve(const Matrix& a, const Vector& b);

/// (X^T X)^+ X^T y.
Vector ols_solve(const Matrix& x, const Vector& y);

}  // namespace exlasso
