#pragma once

#include <vector>

#include "exlasso/problem.hpp"
#include "exlasso/types.hpp"

namespace exlasso {

struct ExclusiveLassoFit;

struct KktReport {
    Vector per_index_residuals;
    double max_residual = 0.0;
    std::vector<int> active_set;  // 0-based
    /// Mean of |X_i^T r| / ||beta_g||_1 over the group's active indices;
    /// NaN for all-zero groups.
    std::vector<double> group_weighted_correlations;
};

struct EquicorrelationSet {
    std::vector<int> indices;  // 0-based, ascending
    double lambda = 0.0;
    double tolerance = 0.0;    // relative to lambda
};

/// Stationarity residuals for the penalized least-squares system. Active
/// index i in group g contributes |X_i^T r - lambda * sign(beta_i) *
/// ||beta_g||_1|; inactive i contributes max(0, |X_i^T r| - lambda *
/// ||beta_g||_1), with r = y - X beta.
KktReport kkt_report(const Problem& problem, const Vector& beta, double lambda);
KktReport kkt_residual(const Problem& problem, const ExclusiveLassoFit& fit);

/// Indices whose residual correlation, weighted by their group's l1 norm,
/// sits within rel_tol * lambda of lambda. Throws AllGroupsZero when no
/// group has a nonzero l1 norm.
EquicorrelationSet equicorrelation_set(const Problem& problem, const ExclusiveLassoFit& fit,
                                       double rel_tol = 1e-6);

/// Support-set characterization: solves (X_S^T X_S + lambda M_S)^+ X_S^T y
/// where M_S is the block-diagonal sign outer-product matrix, and scatters
/// back to length p.
Coefficients prop1_refit(const Problem& problem, const std::vector<int>& support,
                         const std::vector<int>& signs, double lambda);

/// Equicorrelation-set characterization: evaluates
/// (X_E^T X_E + lambda I)^{-1} [X_E^T y - lambda * gamma' . s] with s and
/// gamma' read off the fit.
Coefficients prop2_reconstruct(const Problem& problem, const ExclusiveLassoFit& fit,
                               double rel_tol = 1e-6);

}  // namespace exlasso
