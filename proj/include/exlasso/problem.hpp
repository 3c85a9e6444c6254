#pragma once

#include "exlasso/groups.hpp"
#include "exlasso/types.hpp"

namespace exlasso {

/// Immutable regression problem: n x p design, length-n response, and the
/// group structure over the p columns.
struct Problem {
    Matrix design;
    Vector response;
    PartitionPtr partition;
    bool centered = false;
    double response_mean = 0.0;  // mean removed by center_response

    Eigen::Index n() const { return design.rows(); }
    Eigen::Index p() const { return design.cols(); }
};

/// Coefficient vector tied to the partition it was fit under.
struct Coefficients {
    Vector values;
    PartitionPtr partition;
};

/// Validates shapes and finiteness.
Problem make_problem(Matrix design, Vector response, GroupPartition partition);
Problem make_problem(Matrix design, Vector response, PartitionPtr partition);

/// (1/2) sum over groups of the squared within-group l1 norm. Zero iff
/// beta is zero; reduces to (1/2)||beta||_2^2 with singleton groups.
double penalty_value(const Vector& beta, const GroupPartition& partition);
double penalty_value(const Coefficients& beta);

/// Returns a copy whose response has mean zero; the removed mean is kept
/// for prediction.
Problem center_response(const Problem& problem);

/// Opt-in unit-variance column scaling; off by default everywhere.
Problem standardize_columns(const Problem& problem);

/// max_i |X_i^T y|; the top of the default regularization grid.
double lambda_max_heuristic(const Problem& problem);

}  // namespace exlasso
