#include "exlasso/problem.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "exlasso/errors.hpp"

namespace exlasso {

Problem make_problem(Matrix design, Vector response, GroupPartition partition) {
    return make_problem(std::move(design), std::move(response),
                        std::make_shared<const GroupPartition>(std::move(partition)));
}

Problem make_problem(Matrix design, Vector response, PartitionPtr partition) {
    if (design.cols() != partition->p()) {
        throw DimensionMismatch("design has " + std::to_string(design.cols()) +
                                " columns but partition covers " +
                                std::to_string(partition->p()));
    }
    if (design.rows() != response.size()) {
        throw DimensionMismatch("design has " + std::to_string(design.rows()) +
                                " rows but response has length " +
                                std::to_string(response.size()));
    }
    if (!design.allFinite()) throw NonFiniteEncountered("design contains non-finite entries");
    if (!response.allFinite()) throw NonFiniteEncountered("response contains non-finite entries");

    Problem problem;
    problem.design = std::move(design);
    problem.response = std::move(response);
    problem.partition = std::move(partition);
    return problem;
}

double penalty_value(const Vector& beta, const GroupPartition& partition) {
    if (beta.size() != partition.p()) {
        throw DimensionMismatch("coefficients have length " + std::to_string(beta.size()) +
                                " but partition covers " + std::to_string(partition.p()));
    }
    double total = 0.0;
    for (const auto& group : partition.groups()) {
        double l1 = 0.0;
        for (int idx : group) l1 += std::abs(beta[idx]);
        total += l1 * l1;
    }
    return 0.5 * total;
}

double penalty_value(const Coefficients& beta) {
    return penalty_value(beta.values, *beta.partition);
}

Problem center_response(const Problem& problem) {
    Problem out = problem;
    const double mean = problem.response.size() > 0 ? problem.response.mean() : 0.0;
    out.response.array() -= mean;
    out.centered = true;
    out.response_mean = problem.response_mean + mean;
    return out;
}

Problem standardize_columns(const Problem& problem) {
    Problem out = problem;
    const double n = static_cast<double>(problem.n());
    for (Eigen::Index j = 0; j < problem.p(); ++j) {
        const double sd = std::sqrt(problem.design.col(j).squaredNorm() / n -
                                    std::pow(problem.design.col(j).mean(), 2));
        if (sd > 0.0) out.design.col(j) /= sd;
    }
    return out;
}

double lambda_max_heuristic(const Problem& problem) {
    if (problem.p() == 0) return 0.0;
    return (problem.design.transpose() * problem.response).cwiseAbs().maxCoeff();
}

}  // namespace exlasso
