#include "exlasso/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "exlasso/baselines.hpp"
#include "exlasso/errors.hpp"
#include "exlasso/numerics.hpp"
#include "exlasso/parallel.hpp"
#include "exlasso/rng.hpp"
#include "exlasso/selection.hpp"

namespace exlasso {

namespace {

Matrix sample_rows(const Matrix& chol, int n, std::mt19937_64& eng) {
    const Eigen::Index p = chol.rows();
    Matrix x(n, p);
    for (int r = 0; r < n; ++r) {
        x.row(r) = (chol * rng::standard_normal(p, eng)).transpose();
    }
    return x;
}

ReplicateRecord evaluate_support(const std::string& method, const std::vector<int>& support,
                                 const Problem& problem, const Vector& beta_star,
                                 const Matrix& x_test, const Vector& y_test, int replicate,
                                 std::uint64_t seed) {
    ReplicateRecord rec;
    rec.replicate = replicate;
    rec.seed = seed;
    rec.method = method;
    for (int i : support) {
        if (beta_star[i] != 0.0) {
            ++rec.true_count;
        } else {
            ++rec.false_count;
        }
    }
    const Vector refit = support.empty()
                             ? Vector(Vector::Zero(problem.p()))
                             : ols_refit(problem, support).values;
    rec.pred_error = (y_test - x_test * refit).squaredNorm() / y_test.size();
    rec.mse_beta = (refit - beta_star).squaredNorm() / static_cast<double>(problem.p());
    return rec;
}

std::vector<MethodStats> summarize(const std::vector<ReplicateRecord>& detail) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<const ReplicateRecord*>> by_method;
    for (const ReplicateRecord& rec : detail) {
        if (by_method.find(rec.method) == by_method.end()) order.push_back(rec.method);
        by_method[rec.method].push_back(&rec);
    }

    auto mean_sd = [](const std::vector<double>& v) {
        const double n = static_cast<double>(v.size());
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= n;
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        const double sd = v.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
        return std::pair<double, double>(mean, sd);
    };

    std::vector<MethodStats> summary;
    for (const std::string& method : order) {
        const auto& rows = by_method[method];
        std::vector<double> t, f, pe, mse;
        for (const ReplicateRecord* r : rows) {
            t.push_back(r->true_count);
            f.push_back(r->false_count);
            pe.push_back(r->pred_error);
            mse.push_back(r->mse_beta);
        }
        MethodStats stats;
        stats.method = method;
        std::tie(stats.true_mean, stats.true_sd) = mean_sd(t);
        std::tie(stats.false_mean, stats.false_sd) = mean_sd(f);
        std::tie(stats.pred_mean, stats.pred_sd) = mean_sd(pe);
        std::tie(stats.mse_mean, stats.mse_sd) = mean_sd(mse);
        summary.push_back(stats);
    }
    return summary;
}

/// BIC selection over a plain lasso path with df = nonzero count; returns
/// the chosen grid index (ties toward larger lambda).
int lasso_bic_index(const Problem& problem, const LassoPath& path) {
    int best = -1;
    double best_value = 0.0;
    for (std::size_t i = 0; i < path.betas.size(); ++i) {
        const double rss = (problem.response - problem.design * path.betas[i]).squaredNorm();
        if (rss == 0.0) continue;
        const double df = static_cast<double>(support_set(path.betas[i]).size());
        const double value = bic_value(rss, df, problem.n());
        if (best < 0 || value < best_value) {
            best = static_cast<int>(i);
            best_value = value;
        }
    }
    if (best < 0) throw NoFiniteCriterion("lasso_bic_index: no finite criterion value");
    return best;
}

}  // namespace

Matrix toeplitz_sigma(const ToeplitzSpec& spec) {
    if (!spec.partition) throw Error("toeplitz_sigma: missing partition");
    if (spec.partition->p() != spec.p) {
        throw DimensionMismatch("toeplitz_sigma: partition does not cover p predictors");
    }
    if (spec.within < 0.0 || spec.within >= 1.0 || spec.between < 0.0 || spec.between >= 1.0) {
        throw Error("toeplitz_sigma: correlations must lie in [0, 1)");
    }
    Matrix sigma(spec.p, spec.p);
    for (int i = 0; i < spec.p; ++i) {
        for (int j = 0; j < spec.p; ++j) {
            const double rate = spec.partition->group_of(i) == spec.partition->group_of(j)
                                    ? spec.within
                                    : spec.between;
            sigma(i, j) = std::pow(rate, std::abs(i - j));
        }
    }
    return sigma;
}

Matrix sample_design(const Matrix& sigma, int n, std::uint64_t seed) {
    const Matrix chol = cholesky_factor(sigma);
    std::mt19937_64 eng = rng::engine(seed);
    return sample_rows(chol, n, eng);
}

ScenarioReport run_scenario_one_per_group(const ScenarioSpec& spec) {
    auto partition = std::make_shared<const GroupPartition>(
        GroupPartition::contiguous_blocks(spec.p, spec.num_groups));
    ToeplitzSpec tspec{spec.p, partition, spec.within, spec.between};
    const Matrix chol = cholesky_factor(toeplitz_sigma(tspec));

    std::vector<std::vector<ReplicateRecord>> slots(static_cast<std::size_t>(spec.replicates));
    parallel_for(spec.replicates, [&](int r) {
        const std::uint64_t seed_r = rng::derive_seed(spec.seed, static_cast<std::uint64_t>(r));
        std::mt19937_64 eng = rng::engine(seed_r);

        const Matrix x = sample_rows(chol, spec.n, eng);
        Vector beta_star = Vector::Zero(spec.p);
        for (int g = 0; g < spec.num_groups; ++g) {
            const std::vector<int>& idx = partition->group(g);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(idx.size()) - 1);
            beta_star[idx[static_cast<std::size_t>(pick(eng))]] = spec.coef_magnitude;
        }
        const Vector y = x * beta_star + spec.noise_sigma * rng::standard_normal(spec.n, eng);
        const Matrix x_test = sample_rows(chol, spec.n_test, eng);
        const Vector y_test =
            x_test * beta_star + spec.noise_sigma * rng::standard_normal(spec.n_test, eng);

        const Problem problem = make_problem(x, y, partition);
        auto record = [&](const std::string& method, const std::vector<int>& support) {
            slots[static_cast<std::size_t>(r)].push_back(evaluate_support(
                method, support, problem, beta_star, x_test, y_test, r, seed_r));
        };

        const ExclusiveLassoFit structural = fit(problem, lambda_max_heuristic(problem));
        record("exclusive_lasso", structural.support);

        const PathResult path = fit_path(problem, default_lambda_grid(problem));
        const SelectionResult chosen = select_lambda(path, Criterion::BIC, true);
        record("thresholded_exclusive_lasso", support_set(chosen.thresholded->values));

        record("lasso", lasso_first_k(problem, spec.num_groups).support);
        record("marginal_regression", marginal_regression(problem, spec.num_groups).support);
        record("groupwise_marginal", groupwise_marginal(problem).support);
        record("thresholded_lasso", thresholded_lasso(problem).support);
        record("thresholded_reg_path", thresholded_reg_path(problem).support);
    });

    ScenarioReport report;
    report.scenario = "one_per_group";
    report.replicates = spec.replicates;
    report.base_seed = spec.seed;
    for (const auto& slot : slots) {
        report.detail.insert(report.detail.end(), slot.begin(), slot.end());
    }
    report.summary = summarize(report.detail);
    return report;
}

ScenarioReport run_scenario_multi_per_group(const ScenarioSpec& spec) {
    auto partition = std::make_shared<const GroupPartition>(
        GroupPartition::contiguous_blocks(spec.p, spec.num_groups));
    ToeplitzSpec tspec{spec.p, partition, spec.within, spec.between};
    const Matrix chol = cholesky_factor(toeplitz_sigma(tspec));

    std::vector<std::vector<ReplicateRecord>> slots(static_cast<std::size_t>(spec.replicates));
    parallel_for(spec.replicates, [&](int r) {
        const std::uint64_t seed_r = rng::derive_seed(spec.seed, static_cast<std::uint64_t>(r));
        std::mt19937_64 eng = rng::engine(seed_r);

        const Matrix x = sample_rows(chol, spec.n, eng);

        // Two of the groups carry a second true variable.
        std::vector<int> group_order(static_cast<std::size_t>(spec.num_groups));
        std::iota(group_order.begin(), group_order.end(), 0);
        std::shuffle(group_order.begin(), group_order.end(), eng);
        Vector beta_star = Vector::Zero(spec.p);
        for (int g = 0; g < spec.num_groups; ++g) {
            const std::vector<int>& idx = partition->group(g);
            const int wanted = (group_order[static_cast<std::size_t>(g)] < 2) ? 2 : 1;
            std::vector<int> positions(idx.size());
            std::iota(positions.begin(), positions.end(), 0);
            std::shuffle(positions.begin(), positions.end(), eng);
            for (int t = 0; t < wanted; ++t) {
                beta_star[idx[static_cast<std::size_t>(positions[static_cast<std::size_t>(t)])]] =
                    spec.coef_magnitude;
            }
        }
        const Vector y = x * beta_star + spec.noise_sigma * rng::standard_normal(spec.n, eng);
        const Matrix x_test = sample_rows(chol, spec.n_test, eng);
        const Vector y_test =
            x_test * beta_star + spec.noise_sigma * rng::standard_normal(spec.n_test, eng);

        const Problem problem = make_problem(x, y, partition);
        auto record = [&](const std::string& method, const std::vector<int>& support) {
            slots[static_cast<std::size_t>(r)].push_back(evaluate_support(
                method, support, problem, beta_star, x_test, y_test, r, seed_r));
        };

        const PathResult path = fit_path(problem, default_lambda_grid(problem));
        const SelectionResult chosen = select_lambda(path, Criterion::BIC, false);
        record("exclusive_lasso", chosen.fit.support);

        const LassoPath lpath = lasso_path(problem, default_lambda_grid(problem));
        record("lasso", support_set(lpath.betas[static_cast<std::size_t>(
                            lasso_bic_index(problem, lpath))]));

        record("groupwise_lasso", groupwise_lasso(problem).support);
    });

    ScenarioReport report;
    report.scenario = "multi_per_group";
    report.replicates = spec.replicates;
    report.base_seed = spec.seed;
    for (const auto& slot : slots) {
        report.detail.insert(report.detail.end(), slot.begin(), slot.end());
    }
    report.summary = summarize(report.detail);
    return report;
}

DfTemplate make_df_template(int n, int p, int num_groups, std::uint64_t seed) {
    DfTemplate tmpl;
    tmpl.partition = std::make_shared<const GroupPartition>(
        GroupPartition::contiguous_blocks(p, num_groups));
    ToeplitzSpec tspec{p, tmpl.partition, 0.6, 0.3};
    std::mt19937_64 eng = rng::engine(seed);
    tmpl.design = sample_rows(cholesky_factor(toeplitz_sigma(tspec)), n, eng);
    tmpl.beta_star = Vector::Zero(p);
    for (int g = 0; g < num_groups; ++g) {
        const std::vector<int>& idx = tmpl.partition->group(g);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(idx.size()) - 1);
        tmpl.beta_star[idx[static_cast<std::size_t>(pick(eng))]] = 1.0;
    }
    return tmpl;
}

std::vector<DfSweepPoint> df_monte_carlo(const DfTemplate& tmpl,
                                         const std::vector<double>& grid, int b_draws,
                                         std::uint64_t seed) {
    if (b_draws < 2) throw Error("df_monte_carlo: need at least two draws");
    const Eigen::Index n = tmpl.design.rows();
    const Vector mu_star = tmpl.design * tmpl.beta_star;
    const std::size_t m = grid.size();

    const double lipschitz = largest_eigenvalue(tmpl.design.transpose() * tmpl.design);
    SolverConfig config;
    config.lipschitz_override = lipschitz;

    // Per draw and grid point: the covariance term and the trace estimate.
    Matrix cov_terms(b_draws, static_cast<Eigen::Index>(m));
    Matrix trace_terms(b_draws, static_cast<Eigen::Index>(m));

    parallel_for(b_draws, [&](int b) {
        std::mt19937_64 eng =
            rng::engine(rng::derive_seed(seed, static_cast<std::uint64_t>(b)));
        const Vector y = mu_star + rng::standard_normal(n, eng);
        const Problem problem = make_problem(tmpl.design, y, tmpl.partition);
        const PathResult path = fit_path(problem, grid, config);

        for (std::size_t j = 0; j < m; ++j) {
            const ExclusiveLassoFit& f = path.fits[j];
            trace_terms(b, static_cast<Eigen::Index>(j)) = path.df[j];

            Vector h_mu = Vector::Zero(n);
            if (!f.support.empty()) {
                const SignBlockSystem sys = sign_block_system(problem, f);
                h_mu = sys.design_subset *
                       pinv_solve(sys.system, sys.design_subset.transpose() * mu_star);
            }
            const Vector y_hat = problem.design * f.coefficients.values;
            cov_terms(b, static_cast<Eigen::Index>(j)) = (y_hat - h_mu).dot(y - mu_star);
        }
    });

    std::vector<DfSweepPoint> sweep(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Vector col = cov_terms.col(static_cast<Eigen::Index>(j));
        const double mean = col.mean();
        const double var =
            (col.array() - mean).square().sum() / static_cast<double>(b_draws - 1);
        sweep[j].lambda = grid[j];
        sweep[j].df_mc = mean;  // sigma^2 = 1
        sweep[j].mc_stderr = std::sqrt(var / static_cast<double>(b_draws));
        sweep[j].df_estimate = trace_terms.col(static_cast<Eigen::Index>(j)).mean();
    }
    return sweep;
}

InequalityReport check_prediction_bound(const Problem& problem, const Vector& beta_star,
                                        const ExclusiveLassoFit& fit, double noise_sigma) {
    const double p_hat = penalty_value(fit.coefficients);
    const double p_star = penalty_value(beta_star, *problem.partition);

    InequalityReport report;
    report.inputs.penalty_bound = std::max(p_hat, p_star);
    report.inputs.max_abs_entry = problem.design.cwiseAbs().maxCoeff();
    report.inputs.noise_sigma = noise_sigma;
    report.inputs.group_count = problem.partition->num_groups();
    report.skipped = p_star > p_hat;

    const double n = static_cast<double>(problem.n());
    const double p = static_cast<double>(problem.p());
    report.lhs = (problem.design * (fit.coefficients.values - beta_star)).squaredNorm() / n;
    report.rhs = 2.0 *
                 (report.inputs.penalty_bound + report.inputs.group_count) *
                 report.inputs.max_abs_entry * noise_sigma * std::sqrt(2.0 * std::log(2.0 * p) / n);
    report.satisfied = report.lhs <= report.rhs;
    return report;
}

ScenarioReport run_shifted_dictionary(const ShiftedDictionarySpec& spec) {
    if (spec.shifts % 2 == 0) throw Error("run_shifted_dictionary: shifts must be odd");
    const int p = spec.molecules * spec.shifts;
    const int half = spec.shifts / 2;
    auto partition = std::make_shared<const GroupPartition>(
        GroupPartition::contiguous_blocks(p, spec.molecules));

    std::vector<std::vector<ReplicateRecord>> slots(static_cast<std::size_t>(spec.replicates));
    parallel_for(spec.replicates, [&](int r) {
        const std::uint64_t seed_r = rng::derive_seed(spec.seed, static_cast<std::uint64_t>(r));
        std::mt19937_64 eng = rng::engine(seed_r);

        // Nonnegative peak-mixture signature per molecule.
        Matrix signatures = Matrix::Zero(spec.grid_length, spec.molecules);
        std::uniform_int_distribution<int> n_peaks_dist(2, 4);
        std::uniform_real_distribution<double> center_dist(0.08 * spec.grid_length,
                                                           0.92 * spec.grid_length);
        std::uniform_real_distribution<double> width_dist(2.0, 6.0);
        std::uniform_real_distribution<double> height_dist(0.5, 1.5);
        for (int j = 0; j < spec.molecules; ++j) {
            const int n_peaks = n_peaks_dist(eng);
            for (int q = 0; q < n_peaks; ++q) {
                const double center = center_dist(eng);
                const double width = width_dist(eng);
                const double height = height_dist(eng);
                for (int t = 0; t < spec.grid_length; ++t) {
                    const double d = (t - center) / width;
                    signatures(t, j) += height * std::exp(-0.5 * d * d);
                }
            }
        }

        // Expanded dictionary: shifts -half..half of each signature.
        Matrix x = Matrix::Zero(spec.grid_length, p);
        for (int j = 0; j < spec.molecules; ++j) {
            for (int o = 0; o < spec.shifts; ++o) {
                const int offset = (o - half) * spec.shift_step;
                const int col = j * spec.shifts + o;
                for (int t = 0; t < spec.grid_length; ++t) {
                    const int src = t - offset;
                    if (src >= 0 && src < spec.grid_length) x(t, col) = signatures(src, j);
                }
            }
        }

        Vector beta_star = Vector::Zero(p);
        std::uniform_int_distribution<int> shift_pick(0, spec.shifts - 1);
        for (int j = 0; j < spec.molecules; ++j) {
            beta_star[j * spec.shifts + shift_pick(eng)] = 1.0;
        }

        const Vector noise = rng::standard_normal(spec.grid_length, eng);
        const Vector y = x * beta_star + spec.noise_sigma * noise.cwiseAbs();
        const Vector test_noise = rng::standard_normal(spec.grid_length, eng);
        const Vector y_test = x * beta_star + spec.noise_sigma * test_noise.cwiseAbs();

        const Problem problem = make_problem(x, y, partition);
        auto record = [&](const std::string& method, const std::vector<int>& support) {
            slots[static_cast<std::size_t>(r)].push_back(evaluate_support(
                method, support, problem, beta_star, x, y_test, r, seed_r));
        };

        const PathResult path = fit_path(problem, default_lambda_grid(problem));
        const SelectionResult chosen = select_lambda(path, Criterion::BIC, true);
        record("exclusive_lasso", support_set(chosen.thresholded->values));

        const LassoPath lpath = lasso_path(problem, default_lambda_grid(problem));
        const Vector& lasso_beta =
            lpath.betas[static_cast<std::size_t>(lasso_bic_index(problem, lpath))];
        record("lasso", support_set(groupwise_threshold(lasso_beta, *partition)));

        record("marginal_regression", groupwise_marginal(problem).support);

        std::vector<int> unshifted;
        for (int j = 0; j < spec.molecules; ++j) unshifted.push_back(j * spec.shifts + half);
        record("ols_unshifted", unshifted);
    });

    ScenarioReport report;
    report.scenario = "shifted_dictionary";
    report.replicates = spec.replicates;
    report.base_seed = spec.seed;
    for (const auto& slot : slots) {
        report.detail.insert(report.detail.end(), slot.begin(), slot.end());
    }
    report.summary = summarize(report.detail);
    return report;
}

}  // namespace exlasso
