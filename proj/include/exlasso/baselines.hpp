#pragma once

#include <string>
#include <vector>

#include "exlasso/problem.hpp"
#include "exlasso/solver.hpp"

namespace exlasso {

/// A selector's output: which indices it picked plus the least-squares
/// refit on that support (zero elsewhere).
struct SelectedModel {
    std::string method;
    std::vector<int> support;  // 0-based, ascending
    Coefficients refit;
    double lambda = std::numeric_limits<double>::quiet_NaN();
    int k = -1;
    bool fallback_flagged = false;
};

/// l1-penalized least squares, (1/2)||y - X beta||^2 + lambda ||beta||_1,
/// by proximal gradient descent with fixed step 1/L.
Vector lasso_fit(const Problem& problem, double lambda, const SolverConfig& config = {});

struct LassoPath {
    std::vector<double> lambdas;
    std::vector<Vector> betas;
};

/// Warm-started fits over a descending grid (defaults to the shared
/// 100-point log grid).
LassoPath lasso_path(const Problem& problem, const std::vector<double>& grid,
                     const SolverConfig& config = {});

/// Support at the largest grid lambda with exactly k nonzeros; if no grid
/// point hits k exactly, the closest count wins (smaller count on ties).
SelectedModel lasso_first_k(const Problem& problem, int k, const SolverConfig& config = {});

/// Largest grid lambda whose lasso fit touches every group, then the
/// per-group max-magnitude coefficient. Falls back to the smallest grid
/// lambda (flagged) when no lambda covers all groups.
SelectedModel thresholded_lasso(const Problem& problem, const SolverConfig& config = {});

/// Per group, the first coefficient to enter the lasso path scanning
/// lambda downward; simultaneous entries resolve by larger magnitude.
/// Groups that never enter fall back to their marginal pick (flagged).
SelectedModel thresholded_reg_path(const Problem& problem, const SolverConfig& config = {});

/// Top k indices by |X_i^T y|, ties to the smaller index.
SelectedModel marginal_regression(const Problem& problem, int k);

/// Per-group argmax of |X_i^T y|.
SelectedModel groupwise_marginal(const Problem& problem);

/// Independent lasso per group with a per-group BIC-selected lambda
/// (df = nonzero count); the union of the per-group supports.
SelectedModel groupwise_lasso(const Problem& problem, const SolverConfig& config = {});

/// Least-squares refit restricted to `support`, zeros elsewhere.
Coefficients ols_refit(const Problem& problem, const std::vector<int>& support);

}  // namespace exlasso
