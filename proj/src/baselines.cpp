#include "exlasso/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "exlasso/errors.hpp"
#include "exlasso/numerics.hpp"
#include "exlasso/prox.hpp"
#include "exlasso/selection.hpp"

namespace exlasso {

namespace {

Vector ista(const Matrix& gram, const Vector& xty, double lipschitz, double lambda,
            const SolverConfig& config, const Vector* warm_start) {
    const Eigen::Index p = gram.rows();
    Vector beta = warm_start ? *warm_start : Vector::Zero(p);
    const double inv_l = 1.0 / lipschitz;
    const double threshold = lambda * inv_l;
    for (int k = 0; k < config.max_outer_iterations; ++k) {
        Vector z = beta - inv_l * (gram * beta - xty);
        for (Eigen::Index i = 0; i < p; ++i) z[i] = soft_threshold(z[i], threshold);
        const double change = (z - beta).norm();
        beta.swap(z);
        if (change <= config.outer_tolerance) break;
    }
    return beta;
}

SelectedModel finish(const Problem& problem, std::string method, std::vector<int> support) {
    std::sort(support.begin(), support.end());
    SelectedModel model;
    model.method = std::move(method);
    model.refit = support.empty()
                      ? Coefficients{Vector::Zero(problem.p()), problem.partition}
                      : ols_refit(problem, support);
    model.support = std::move(support);
    return model;
}

int groupwise_argmax(const Problem& problem, const Vector& scores, int g) {
    const std::vector<int>& idx = problem.partition->group(g);
    int best = idx.front();
    for (int i : idx) {
        if (std::abs(scores[i]) > std::abs(scores[best])) best = i;
    }
    return best;
}

}  // namespace

Vector lasso_fit(const Problem& problem, double lambda, const SolverConfig& config) {
    if (lambda < 0.0) throw Error("lasso_fit: lambda must be nonnegative");
    const Matrix gram = problem.design.transpose() * problem.design;
    const Vector xty = problem.design.transpose() * problem.response;
    double lipschitz = config.lipschitz_override ? *config.lipschitz_override
                                                 : largest_eigenvalue(gram);
    if (!(lipschitz > 0.0)) lipschitz = 1.0;
    return ista(gram, xty, lipschitz, lambda, config, nullptr);
}

LassoPath lasso_path(const Problem& problem, const std::vector<double>& grid,
                     const SolverConfig& config) {
    if (grid.empty()) throw EmptyPath("lasso_path: empty lambda grid");
    const Matrix gram = problem.design.transpose() * problem.design;
    const Vector xty = problem.design.transpose() * problem.response;
    double lipschitz = config.lipschitz_override ? *config.lipschitz_override
                                                 : largest_eigenvalue(gram);
    if (!(lipschitz > 0.0)) lipschitz = 1.0;

    LassoPath path;
    path.lambdas = grid;
    path.betas.reserve(grid.size());
    const Vector* warm = nullptr;
    for (double lambda : grid) {
        path.betas.push_back(ista(gram, xty, lipschitz, lambda, config, warm));
        warm = &path.betas.back();
    }
    return path;
}

SelectedModel lasso_first_k(const Problem& problem, int k, const SolverConfig& config) {
    if (k < 1) throw Error("lasso_first_k: k must be positive");
    const std::vector<double> grid = default_lambda_grid(problem);
    const Matrix gram = problem.design.transpose() * problem.design;
    const Vector xty = problem.design.transpose() * problem.response;
    double lipschitz = largest_eigenvalue(gram);
    if (!(lipschitz > 0.0)) lipschitz = 1.0;

    std::vector<int> best_support;
    double best_lambda = grid.front();
    int best_distance = -1;
    Vector warm = Vector::Zero(problem.p());
    for (double lambda : grid) {
        warm = ista(gram, xty, lipschitz, lambda, config, &warm);
        std::vector<int> support = support_set(warm);
        const int count = static_cast<int>(support.size());
        const int distance = std::abs(count - k);
        const bool better =
            best_distance < 0 || distance < best_distance ||
            (distance == best_distance &&
             count < static_cast<int>(best_support.size()));
        if (better) {
            best_support = std::move(support);
            best_lambda = lambda;
            best_distance = distance;
        }
        if (distance == 0) break;  // largest lambda with exactly k
    }

    SelectedModel model = finish(problem, "lasso", std::move(best_support));
    model.lambda = best_lambda;
    model.k = k;
    model.fallback_flagged = best_distance != 0;
    return model;
}

SelectedModel thresholded_lasso(const Problem& problem, const SolverConfig& config) {
    const std::vector<double> grid = default_lambda_grid(problem);
    const Matrix gram = problem.design.transpose() * problem.design;
    const Vector xty = problem.design.transpose() * problem.response;
    double lipschitz = largest_eigenvalue(gram);
    if (!(lipschitz > 0.0)) lipschitz = 1.0;
    const GroupPartition& partition = *problem.partition;

    Vector warm = Vector::Zero(problem.p());
    Vector chosen;
    double chosen_lambda = grid.back();
    bool covered = false;
    for (double lambda : grid) {
        warm = ista(gram, xty, lipschitz, lambda, config, &warm);
        const std::vector<int> support = support_set(warm);
        std::vector<char> group_hit(static_cast<std::size_t>(partition.num_groups()), 0);
        for (int i : support) group_hit[static_cast<std::size_t>(partition.group_of(i))] = 1;
        covered = std::all_of(group_hit.begin(), group_hit.end(), [](char c) { return c != 0; });
        chosen = warm;
        chosen_lambda = lambda;
        if (covered) break;
    }

    const Vector kept = groupwise_threshold(chosen, partition);
    SelectedModel model = finish(problem, "thresholded_lasso", support_set(kept));
    model.lambda = chosen_lambda;
    model.fallback_flagged = !covered;
    return model;
}

SelectedModel thresholded_reg_path(const Problem& problem, const SolverConfig& config) {
    const std::vector<double> grid = default_lambda_grid(problem);
    const Matrix gram = problem.design.transpose() * problem.design;
    const Vector xty = problem.design.transpose() * problem.response;
    double lipschitz = largest_eigenvalue(gram);
    if (!(lipschitz > 0.0)) lipschitz = 1.0;
    const GroupPartition& partition = *problem.partition;
    const int num_groups = partition.num_groups();

    std::vector<int> pick(static_cast<std::size_t>(num_groups), -1);
    int remaining = num_groups;
    Vector warm = Vector::Zero(problem.p());
    for (double lambda : grid) {
        warm = ista(gram, xty, lipschitz, lambda, config, &warm);
        const std::vector<int> support = support_set(warm);
        for (int g = 0; g < num_groups && remaining > 0; ++g) {
            if (pick[static_cast<std::size_t>(g)] >= 0) continue;
            int entered = -1;
            for (int i : support) {
                if (partition.group_of(i) != g) continue;
                if (entered < 0 || std::abs(warm[i]) > std::abs(warm[entered])) entered = i;
            }
            if (entered >= 0) {
                pick[static_cast<std::size_t>(g)] = entered;
                --remaining;
            }
        }
        if (remaining == 0) break;
    }

    bool fallback = false;
    const Vector marginal = problem.design.transpose() * problem.response;
    std::vector<int> support;
    for (int g = 0; g < num_groups; ++g) {
        int i = pick[static_cast<std::size_t>(g)];
        if (i < 0) {
            i = groupwise_argmax(problem, marginal, g);
            fallback = true;
        }
        support.push_back(i);
    }

    SelectedModel model = finish(problem, "thresholded_reg_path", std::move(support));
    model.fallback_flagged = fallback;
    return model;
}

SelectedModel marginal_regression(const Problem& problem, int k) {
    if (k < 1 || k > problem.p()) throw Error("marginal_regression: k out of range");
    const Vector scores = (problem.design.transpose() * problem.response).cwiseAbs();
    std::vector<int> order(static_cast<std::size_t>(problem.p()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return scores[a] > scores[b]; });
    order.resize(static_cast<std::size_t>(k));

    SelectedModel model = finish(problem, "marginal_regression", std::move(order));
    model.k = k;
    return model;
}

SelectedModel groupwise_marginal(const Problem& problem) {
    const Vector scores = problem.design.transpose() * problem.response;
    std::vector<int> support;
    for (int g = 0; g < problem.partition->num_groups(); ++g) {
        support.push_back(groupwise_argmax(problem, scores, g));
    }
    return finish(problem, "groupwise_marginal", std::move(support));
}

SelectedModel groupwise_lasso(const Problem& problem, const SolverConfig& config) {
    const GroupPartition& partition = *problem.partition;
    std::vector<int> support;

    for (int g = 0; g < partition.num_groups(); ++g) {
        const std::vector<int>& idx = partition.group(g);
        Matrix xg(problem.n(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t j = 0; j < idx.size(); ++j) xg.col(static_cast<Eigen::Index>(j)) = problem.design.col(idx[j]);

        const double lambda_top = (xg.transpose() * problem.response).cwiseAbs().maxCoeff();
        if (!(lambda_top > 0.0)) continue;  // group carries no signal
        Problem sub = make_problem(xg, problem.response,
                                   GroupPartition::singletons(static_cast<int>(idx.size())));
        const LassoPath path =
            lasso_path(sub, log_lambda_grid(lambda_top, 1e-4 * lambda_top, 100), config);

        int best = -1;
        double best_value = 0.0;
        for (std::size_t i = 0; i < path.betas.size(); ++i) {
            const double rss = (problem.response - xg * path.betas[i]).squaredNorm();
            if (rss == 0.0) continue;
            const double df = static_cast<double>(support_set(path.betas[i]).size());
            const double value = bic_value(rss, df, problem.n());
            if (best < 0 || value < best_value) {
                best = static_cast<int>(i);
                best_value = value;
            }
        }
        if (best < 0) continue;
        for (int i : support_set(path.betas[static_cast<std::size_t>(best)])) {
            support.push_back(idx[static_cast<std::size_t>(i)]);
        }
    }

    return finish(problem, "groupwise_lasso", std::move(support));
}

Coefficients ols_refit(const Problem& problem, const std::vector<int>& support) {
    if (support.empty()) throw EmptySupport("ols_refit: empty support");
    Matrix xs(problem.n(), static_cast<Eigen::Index>(support.size()));
    for (std::size_t j = 0; j < support.size(); ++j) xs.col(static_cast<Eigen::Index>(j)) = problem.design.col(support[j]);
    const Vector beta_s = ols_solve(xs, problem.response);
    Vector beta = Vector::Zero(problem.p());
    for (std::size_t j = 0; j < support.size(); ++j) beta[support[j]] = beta_s[static_cast<Eigen::Index>(j)];
    return Coefficients{beta, problem.partition};
}

}  // namespace exlasso
