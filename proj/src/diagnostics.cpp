#include "exlasso/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "exlasso/errors.hpp"
#include "exlasso/numerics.hpp"
#include "exlasso/solver.hpp"

namespace exlasso {

namespace {

Matrix submatrix(const Matrix& x, const std::vector<int>& cols) {
    Matrix out(x.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = x.col(cols[j]);
    return out;
}

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

KktReport kkt_report(const Problem& problem, const Vector& beta, double lambda) {
    if (beta.size() != problem.p()) {
        throw DimensionMismatch("kkt_report: coefficients have length " +
                                std::to_string(beta.size()) + " but design has " +
                                std::to_string(problem.p()) + " columns");
    }
    const GroupPartition& partition = *problem.partition;
    const Vector residual = problem.response - problem.design * beta;
    const Vector correlations = problem.design.transpose() * residual;

    KktReport report;
    report.active_set = support_set(beta);
    std::vector<char> active(static_cast<std::size_t>(problem.p()), 0);
    for (int i : report.active_set) active[static_cast<std::size_t>(i)] = 1;

    report.per_index_residuals.resize(problem.p());
    report.group_weighted_correlations.assign(static_cast<std::size_t>(partition.num_groups()),
                                              std::numeric_limits<double>::quiet_NaN());

    for (int g = 0; g < partition.num_groups(); ++g) {
        const std::vector<int>& idx = partition.group(g);
        double group_l1 = 0.0;
        for (int i : idx) group_l1 += std::abs(beta[i]);

        double corr_sum = 0.0;
        int corr_count = 0;
        for (int i : idx) {
            if (active[static_cast<std::size_t>(i)]) {
                report.per_index_residuals[i] =
                    std::abs(correlations[i] - lambda * sign_of(beta[i]) * group_l1);
                if (group_l1 > 0.0) {
                    corr_sum += std::abs(correlations[i]) / group_l1;
                    ++corr_count;
                }
            } else {
                report.per_index_residuals[i] =
                    std::max(0.0, std::abs(correlations[i]) - lambda * group_l1);
            }
        }
        if (corr_count > 0) {
            report.group_weighted_correlations[static_cast<std::size_t>(g)] =
                corr_sum / corr_count;
        }
    }
    report.max_residual =
        problem.p() > 0 ? report.per_index_residuals.cwiseAbs().maxCoeff() : 0.0;
    return report;
}

KktReport kkt_residual(const Problem& problem, const ExclusiveLassoFit& fit) {
    return kkt_report(problem, fit.coefficients.values, fit.lambda);
}

EquicorrelationSet equicorrelation_set(const Problem& problem, const ExclusiveLassoFit& fit,
                                       double rel_tol) {
    const GroupPartition& partition = *problem.partition;
    const Vector& beta = fit.coefficients.values;
    const Vector residual = problem.response - problem.design * beta;
    const Vector correlations = problem.design.transpose() * residual;

    std::vector<double> group_l1(static_cast<std::size_t>(partition.num_groups()), 0.0);
    bool any_nonzero = false;
    for (int g = 0; g < partition.num_groups(); ++g) {
        for (int i : partition.group(g)) group_l1[static_cast<std::size_t>(g)] += std::abs(beta[i]);
        any_nonzero = any_nonzero || group_l1[static_cast<std::size_t>(g)] > 0.0;
    }
    if (!any_nonzero) throw AllGroupsZero("equicorrelation_set: every group is zero");

    EquicorrelationSet set;
    set.lambda = fit.lambda;
    set.tolerance = rel_tol;
    for (Eigen::Index i = 0; i < problem.p(); ++i) {
        const double l1 = group_l1[static_cast<std::size_t>(partition.group_of(static_cast<int>(i)))];
        if (l1 <= 0.0) continue;
        const double weighted = std::abs(correlations[i]) / l1;
        if (std::abs(weighted - fit.lambda) <= rel_tol * fit.lambda) {
            set.indices.push_back(static_cast<int>(i));
        }
    }
    return set;
}

Coefficients prop1_refit(const Problem& problem, const std::vector<int>& support,
                         const std::vector<int>& signs, double lambda) {
    if (support.empty()) throw EmptySupport("prop1_refit: empty support");
    if (signs.size() != support.size()) {
        throw DimensionMismatch("prop1_refit: one sign per support index required");
    }
    const GroupPartition& partition = *problem.partition;
    const Matrix xs = submatrix(problem.design, support);
    Matrix system = xs.transpose() * xs;

    // Add lambda * M_S, the per-group sign outer products.
    for (std::size_t a = 0; a < support.size(); ++a) {
        for (std::size_t b = 0; b < support.size(); ++b) {
            if (partition.group_of(support[a]) == partition.group_of(support[b])) {
                system(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
                    lambda * signs[a] * signs[b];
            }
        }
    }

    const Vector beta_s = pinv_solve(system, xs.transpose() * problem.response);
    Vector beta = Vector::Zero(problem.p());
    for (std::size_t a = 0; a < support.size(); ++a) beta[support[a]] = beta_s[static_cast<Eigen::Index>(a)];
    return Coefficients{beta, problem.partition};
}

Coefficients prop2_reconstruct(const Problem& problem, const ExclusiveLassoFit& fit,
                               double rel_tol) {
    const EquicorrelationSet set = equicorrelation_set(problem, fit, rel_tol);
    if (set.indices.empty()) {
        throw AllGroupsZero("prop2_reconstruct: equicorrelation set is empty");
    }
    const GroupPartition& partition = *problem.partition;
    const Vector& beta_hat = fit.coefficients.values;

    std::vector<double> group_l1(static_cast<std::size_t>(partition.num_groups()), 0.0);
    for (Eigen::Index i = 0; i < beta_hat.size(); ++i) {
        group_l1[static_cast<std::size_t>(partition.group_of(static_cast<int>(i)))] +=
            std::abs(beta_hat[i]);
    }

    const Matrix xe = submatrix(problem.design, set.indices);
    Matrix system = xe.transpose() * xe;

    Vector rhs = xe.transpose() * problem.response;
    for (std::size_t a = 0; a < set.indices.size(); ++a) {
        const int i = set.indices[a];
        const double gamma =
            group_l1[static_cast<std::size_t>(partition.group_of(i))] - std::abs(beta_hat[i]);
        rhs[static_cast<Eigen::Index>(a)] -= fit.lambda * gamma * sign_of(beta_hat[i]);
    }

    if (fit.lambda == 0.0) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(system);
        const double emax = es.eigenvalues().cwiseAbs().maxCoeff();
        if (es.eigenvalues().minCoeff() <= 1e-10 * emax) {
            throw SingularSystem("prop2_reconstruct: lambda = 0 with rank-deficient X_E");
        }
    }
    system.diagonal().array() += fit.lambda;

    const Vector beta_e = system.ldlt().solve(rhs);
    Vector beta = Vector::Zero(problem.p());
    for (std::size_t a = 0; a < set.indices.size(); ++a) {
        beta[set.indices[a]] = beta_e[static_cast<Eigen::Index>(a)];
    }
    return Coefficients{beta, problem.partition};
}

}  // namespace exlasso
