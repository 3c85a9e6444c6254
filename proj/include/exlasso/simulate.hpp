#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exlasso/groups.hpp"
#include "exlasso/problem.hpp"
#include "exlasso/solver.hpp"
#include "exlasso/types.hpp"

namespace exlasso {

/// Correlation structure with geometric decay: Sigma_ij = within^|i-j|
/// when i and j share a group, between^|i-j| otherwise, unit diagonal.
struct ToeplitzSpec {
    int p = 0;
    PartitionPtr partition;
    double within = 0.6;
    double between = 0.6;
};

Matrix toeplitz_sigma(const ToeplitzSpec& spec);

/// n rows of L g with g standard normal and L the Cholesky factor of
/// sigma; bit-identical for a fixed seed.
Matrix sample_design(const Matrix& sigma, int n, std::uint64_t seed);

struct ScenarioSpec {
    int n = 100;
    int p = 100;
    int num_groups = 5;       // contiguous equal-sized blocks
    double within = 0.6;
    double between = 0.6;
    double coef_magnitude = 1.0;
    double noise_sigma = 1.0;
    int replicates = 50;
    int n_test = 1000;
    std::uint64_t seed = 1;
};

struct MethodStats {
    std::string method;
    double true_mean = 0, true_sd = 0;
    double false_mean = 0, false_sd = 0;
    double pred_mean = 0, pred_sd = 0;
    double mse_mean = 0, mse_sd = 0;  // (1/p) ||refit - beta*||^2
};

struct ReplicateRecord {
    int replicate = 0;
    std::uint64_t seed = 0;
    std::string method;
    int true_count = 0;
    int false_count = 0;
    double pred_error = 0.0;
    double mse_beta = 0.0;
};

struct ScenarioReport {
    std::string scenario;
    int replicates = 0;
    std::uint64_t base_seed = 0;
    std::vector<MethodStats> summary;
    std::vector<ReplicateRecord> detail;
};

/// One true variable per group; seven selectors, each OLS-refit on its
/// chosen support and scored on a fresh test draw.
ScenarioReport run_scenario_one_per_group(const ScenarioSpec& spec);

/// Seven true variables spread one-or-two per group; compares the
/// BIC-tuned penalized fits.
ScenarioReport run_scenario_multi_per_group(const ScenarioSpec& spec);

struct DfTemplate {
    Matrix design;
    PartitionPtr partition;
    Vector beta_star;
};

/// Fixed design and true coefficients for the degrees-of-freedom sweep.
DfTemplate make_df_template(int n, int p, int num_groups, std::uint64_t seed);

struct DfSweepPoint {
    double lambda = 0.0;
    double df_estimate = 0.0;  // average of the trace formula over the draws
    double df_mc = 0.0;        // covariance-based simulated df
    double mc_stderr = 0.0;
};

/// Simulated degrees of freedom sum_i cov(yhat_i, y_i)/sigma^2 with
/// sigma = 1, estimated from b_draws response draws, next to the average
/// of the closed-form estimate over the same draws.
std::vector<DfSweepPoint> df_monte_carlo(const DfTemplate& tmpl,
                                         const std::vector<double>& grid, int b_draws,
                                         std::uint64_t seed);

struct BoundInputs {
    double penalty_bound = 0.0;  // K
    double max_abs_entry = 0.0;  // M
    double noise_sigma = 0.0;
    int group_count = 0;
};

struct InequalityReport {
    double lhs = 0.0;  // (1/n)||X(beta_hat - beta*)||^2
    double rhs = 0.0;  // 2 (K + |G|) M sigma sqrt(2 log(2p) / n)
    bool satisfied = false;
    bool skipped = false;  // penalty of beta* exceeds penalty of the fit
    BoundInputs inputs;
};

/// Estimated-prediction-error bound for one fitted replicate. K is
/// max(P(beta_hat), P(beta*)); the check is skipped when P(beta*) exceeds
/// P(beta_hat) because the bound covers the constrained estimator.
InequalityReport check_prediction_bound(const Problem& problem, const Vector& beta_star,
                                        const ExclusiveLassoFit& fit, double noise_sigma);

struct ShiftedDictionarySpec {
    int molecules = 10;
    int shifts = 11;       // odd: center plus symmetric left/right copies
    int grid_length = 500;
    int shift_step = 1;    // grid samples per shift; 0 collapses all copies
    double noise_sigma = 0.01;
    int replicates = 20;
    std::uint64_t seed = 1;
};

/// Synthetic spectroscopy-style study: groups of shifted copies of
/// nonnegative peak signatures, positive noise, and within-group shift
/// selection versus an unshifted-dictionary least squares baseline.
ScenarioReport run_shifted_dictionary(const ShiftedDictionarySpec& spec);

}  // namespace exlasso
