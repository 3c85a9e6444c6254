#pragma once

#include <optional>
#include <vector>

#include "exlasso/problem.hpp"
#include "exlasso/types.hpp"

namespace exlasso {

struct SolverConfig {
    /// Outer stop: ||beta_{k+1} - beta_k||_2 <= outer_tolerance.
    double outer_tolerance = 1e-8;
    /// Inner prox tolerance at outer step k is min(delta0, delta0 / k^2),
    /// which keeps the sequence of square roots summable.
    double inner_delta0 = 1e-8;
    int max_outer_iterations = 100000;
    int max_inner_sweeps = 10000;
    /// Skips the power iteration when the caller already knows L.
    std::optional<double> lipschitz_override;

    double inner_tolerance(int k) const {
        const double kk = static_cast<double>(k);
        return std::min(inner_delta0, inner_delta0 / (kk * kk));
    }
};

struct ExclusiveLassoFit {
    Coefficients coefficients;
    double lambda = 0.0;
    std::vector<int> support;            // 0-based, ascending
    std::vector<double> objective_trace; // trace[0] is the starting objective
    int outer_iterations = 0;
    bool converged = false;
    double kkt_residual = 0.0;
    double lipschitz = 0.0;
};

struct PathResult {
    std::vector<double> lambdas;  // strictly descending
    std::vector<ExclusiveLassoFit> fits;
    std::vector<double> df;
    std::vector<double> bic;   // NaN where the criterion is undefined (zero RSS)
    std::vector<double> ebic;
};

/// Active set under the shared threshold |beta_i| > 1e-10 * max(1, ||beta||_inf).
/// Coordinate descent produces exact zeros, so this only guards drift.
std::vector<int> support_set(const Vector& beta);

/// (1/2)||y - X beta||^2 + lambda * penalty_value(beta).
double objective_value(const Problem& problem, const Vector& beta, double lambda);
double objective_value(const Problem& problem, const Coefficients& beta, double lambda);

/// z = beta - (1/L) X^T (X beta - y).
Vector gradient_step(const Problem& problem, const Vector& beta, double lipschitz);

/// Proximal gradient descent with fixed step 1/L, L = lambda_max(X^T X),
/// and a tightening inner prox tolerance. Starts from zero (or warm_start).
ExclusiveLassoFit fit(const Problem& problem, double lambda, const SolverConfig& config = {},
                      const Vector* warm_start = nullptr);

/// Fits a strictly descending lambda grid with warm starts and fills the
/// df / BIC / EBIC columns.
PathResult fit_path(const Problem& problem, const std::vector<double>& grid,
                    const SolverConfig& config = {});

/// 100 log-spaced points from lambda_max_heuristic down four decades.
std::vector<double> default_lambda_grid(const Problem& problem);
std::vector<double> log_lambda_grid(double lambda_max, double lambda_min, int count);

}  // namespace exlasso
