#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exlasso/solver.hpp"

namespace exlasso {

enum class Criterion { BIC, EBIC };

std::string criterion_name(Criterion criterion);

/// X restricted to the fit's support together with
/// X_S^T X_S + lambda M_S, where M_S holds the per-group sign outer
/// products of the fit on its diagonal blocks.
struct SignBlockSystem {
    Matrix design_subset;  // X_S
    Matrix system;         // X_S^T X_S + lambda M_S
    std::vector<int> support;
};

SignBlockSystem sign_block_system(const Problem& problem, const ExclusiveLassoFit& fit);

/// Unbiased degrees-of-freedom estimate trace[X_S (X_S^T X_S +
/// lambda M_S)^+ X_S^T], evaluated column-by-column through pinv_solve.
/// Zero for an empty support.
double df_estimate(const Problem& problem, const ExclusiveLassoFit& fit);

/// log(RSS/n) + df * log(n)/n. Throws PerfectFit when RSS is exactly zero.
double bic_value(double rss, double df, Eigen::Index n);
double bic(const Problem& problem, const ExclusiveLassoFit& fit, double df);

/// bic + df * log(p)/n.
double ebic_value(double rss, double df, Eigen::Index n, Eigen::Index p);
double ebic(const Problem& problem, const ExclusiveLassoFit& fit, double df);

struct SelectionResult {
    double lambda = 0.0;
    Criterion criterion = Criterion::BIC;
    std::vector<double> values;  // one per grid point, NaN where undefined
    int chosen_index = 0;
    ExclusiveLassoFit fit;
    std::optional<Coefficients> thresholded;
};

/// Argmin of the requested criterion over the path; ties and NaNs resolve
/// toward larger lambda. Throws NoFiniteCriterion when nothing is finite.
SelectionResult select_lambda(const PathResult& path, Criterion criterion,
                              bool threshold_groupwise = false);

/// Keeps only the largest-magnitude coefficient in each group (smallest
/// index on ties); all-zero groups stay zero. Idempotent.
Coefficients groupwise_threshold(const ExclusiveLassoFit& fit);
Vector groupwise_threshold(const Vector& beta, const GroupPartition& partition);

}  // namespace exlasso
