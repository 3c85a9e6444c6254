#include "exlasso/solver.hpp"

#include <cmath>
#include <string>

#include "exlasso/diagnostics.hpp"
#include "exlasso/errors.hpp"
#include "exlasso/numerics.hpp"
#include "exlasso/prox.hpp"
#include "exlasso/selection.hpp"

namespace exlasso {

namespace {

constexpr double kSupportThreshold = 1e-10;

// Gram-form quantities shared across the iterations of one fit (and, for
// paths, across all fits on the grid).
struct Workspace {
    Matrix gram;       // X^T X
    Vector xty;        // X^T y
    double yty = 0.0;  // ||y||^2
    double lipschitz = 1.0;
};

Workspace make_workspace(const Problem& problem, const SolverConfig& config) {
    Workspace ws;
    ws.gram = problem.design.transpose() * problem.design;
    ws.xty = problem.design.transpose() * problem.response;
    ws.yty = problem.response.squaredNorm();
    ws.lipschitz = config.lipschitz_override ? *config.lipschitz_override
                                             : largest_eigenvalue(ws.gram);
    if (!(ws.lipschitz > 0.0)) ws.lipschitz = 1.0;  // zero design; gradient vanishes anyway
    return ws;
}

double objective_from_workspace(const Workspace& ws, const Problem& problem,
                                const Vector& beta, double lambda) {
    const double loss =
        0.5 * (beta.dot(ws.gram * beta) + ws.yty) - beta.dot(ws.xty);
    return loss + lambda * penalty_value(beta, *problem.partition);
}

ExclusiveLassoFit fit_with_workspace(const Problem& problem, double lambda,
                                     const SolverConfig& config, const Workspace& ws,
                                     const Vector* warm_start) {
    if (lambda < 0.0) throw Error("fit: lambda must be nonnegative");
    const Eigen::Index p = problem.p();

    Vector beta = warm_start ? *warm_start : Vector::Zero(p);
    if (warm_start && warm_start->size() != p) {
        throw DimensionMismatch("fit: warm start has wrong length");
    }

    ExclusiveLassoFit out;
    out.lambda = lambda;
    out.lipschitz = ws.lipschitz;
    out.objective_trace.push_back(objective_from_workspace(ws, problem, beta, lambda));

    ProxRequest prox;
    prox.lambda = lambda / ws.lipschitz;
    prox.partition = problem.partition;
    prox.max_sweeps = config.max_inner_sweeps;

    const double inv_l = 1.0 / ws.lipschitz;
    int iterations = 0;
    for (int k = 1; k <= config.max_outer_iterations; ++k) {
        iterations = k;
        prox.inner_tolerance = config.inner_tolerance(k);
        prox.point = beta - inv_l * (ws.gram * beta - ws.xty);
        prox.warm_start = &beta;

        Vector next = prox_exclusive(prox).minimizer;
        const double change = (next - beta).norm();
        beta.swap(next);

        const double objective = objective_from_workspace(ws, problem, beta, lambda);
        if (!std::isfinite(objective)) {
            throw NonFiniteEncountered("fit: objective became non-finite at iteration " +
                                       std::to_string(k));
        }
        out.objective_trace.push_back(objective);
        if (change <= config.outer_tolerance) {
            out.converged = true;
            break;
        }
    }

    out.outer_iterations = iterations;
    out.coefficients = Coefficients{beta, problem.partition};
    out.support = support_set(beta);
    out.kkt_residual = kkt_report(problem, beta, lambda).max_residual;
    return out;
}

}  // namespace

std::vector<int> support_set(const Vector& beta) {
    const double scale = beta.size() > 0 ? beta.cwiseAbs().maxCoeff() : 0.0;
    const double threshold = kSupportThreshold * std::max(1.0, scale);
    std::vector<int> support;
    for (Eigen::Index i = 0; i < beta.size(); ++i) {
        if (std::abs(beta[i]) > threshold) support.push_back(static_cast<int>(i));
    }
    return support;
}

double objective_value(const Problem& problem, const Vector& beta, double lambda) {
    if (beta.size() != problem.p()) {
        throw DimensionMismatch("objective_value: coefficients have length " +
                                std::to_string(beta.size()) + " but design has " +
                                std::to_string(problem.p()) + " columns");
    }
    if (lambda < 0.0) throw Error("objective_value: lambda must be nonnegative");
    const double loss = 0.5 * (problem.response - problem.design * beta).squaredNorm();
    return loss + lambda * penalty_value(beta, *problem.partition);
}

double objective_value(const Problem& problem, const Coefficients& beta, double lambda) {
    return objective_value(problem, beta.values, lambda);
}

Vector gradient_step(const Problem& problem, const Vector& beta, double lipschitz) {
    if (!(lipschitz > 0.0)) throw Error("gradient_step: L must be positive");
    return beta - (problem.design.transpose() * (problem.design * beta - problem.response)) /
                      lipschitz;
}

ExclusiveLassoFit fit(const Problem& problem, double lambda, const SolverConfig& config,
                      const Vector* warm_start) {
    const Workspace ws = make_workspace(problem, config);
    return fit_with_workspace(problem, lambda, config, ws, warm_start);
}

PathResult fit_path(const Problem& problem, const std::vector<double>& grid,
                    const SolverConfig& config) {
    if (grid.empty()) throw EmptyPath("fit_path: empty lambda grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 0.0) throw Error("fit_path: negative lambda in grid");
        if (i > 0 && grid[i] >= grid[i - 1]) {
            throw Error("fit_path: grid must be strictly descending");
        }
    }

    const Workspace ws = make_workspace(problem, config);
    SolverConfig path_config = config;
    path_config.lipschitz_override = ws.lipschitz;

    PathResult path;
    path.lambdas = grid;
    path.fits.reserve(grid.size());

    const Vector* warm = nullptr;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            path.fits.push_back(fit_with_workspace(problem, grid[i], path_config, ws, warm));
        } catch (const Error& err) {
            throw Error("fit_path: lambda=" + std::to_string(grid[i]) + ": " + err.what());
        }
        warm = &path.fits.back().coefficients.values;
    }

    path.df.resize(grid.size());
    path.bic.resize(grid.size());
    path.ebic.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        path.df[i] = df_estimate(problem, path.fits[i]);
        try {
            path.bic[i] = bic(problem, path.fits[i], path.df[i]);
            path.ebic[i] = ebic(problem, path.fits[i], path.df[i]);
        } catch (const PerfectFit&) {
            path.bic[i] = std::numeric_limits<double>::quiet_NaN();
            path.ebic[i] = std::numeric_limits<double>::quiet_NaN();
        }
    }
    return path;
}

std::vector<double> log_lambda_grid(double lambda_max, double lambda_min, int count) {
    if (count < 1) throw Error("log_lambda_grid: count must be positive");
    if (!(lambda_max > 0.0) || !(lambda_min > 0.0) || lambda_min >= lambda_max) {
        throw Error("log_lambda_grid: need 0 < lambda_min < lambda_max");
    }
    if (count == 1) return {lambda_max};
    std::vector<double> grid(static_cast<std::size_t>(count));
    const double step = (std::log(lambda_min) - std::log(lambda_max)) / (count - 1);
    for (int i = 0; i < count; ++i) {
        grid[static_cast<std::size_t>(i)] = std::exp(std::log(lambda_max) + step * i);
    }
    grid.front() = lambda_max;
    grid.back() = lambda_min;
    return grid;
}

std::vector<double> default_lambda_grid(const Problem& problem) {
    const double lambda_max = lambda_max_heuristic(problem);
    if (!(lambda_max > 0.0)) return {0.0};
    return log_lambda_grid(lambda_max, 1e-4 * lambda_max, 100);
}

}  // namespace exlasso
