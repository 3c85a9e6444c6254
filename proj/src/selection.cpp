#include "exlasso/selection.hpp"

#include <cmath>
#include <limits>

#include "exlasso/errors.hpp"
#include "exlasso/numerics.hpp"

namespace exlasso {

namespace {

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

std::string criterion_name(Criterion criterion) {
    return criterion == Criterion::BIC ? "bic" : "ebic";
}

SignBlockSystem sign_block_system(const Problem& problem, const ExclusiveLassoFit& fit) {
    const std::vector<int>& support = fit.support;
    if (support.empty()) throw EmptySupport("sign_block_system: empty support");

    const GroupPartition& partition = *problem.partition;
    const Eigen::Index s = static_cast<Eigen::Index>(support.size());
    SignBlockSystem out;
    out.support = support;
    out.design_subset.resize(problem.n(), s);
    for (Eigen::Index j = 0; j < s; ++j) {
        out.design_subset.col(j) = problem.design.col(support[static_cast<std::size_t>(j)]);
    }

    out.system = out.design_subset.transpose() * out.design_subset;
    const Vector& beta = fit.coefficients.values;
    for (Eigen::Index a = 0; a < s; ++a) {
        for (Eigen::Index b = 0; b < s; ++b) {
            const int ia = support[static_cast<std::size_t>(a)];
            const int ib = support[static_cast<std::size_t>(b)];
            if (partition.group_of(ia) == partition.group_of(ib)) {
                out.system(a, b) += fit.lambda * sign_of(beta[ia]) * sign_of(beta[ib]);
            }
        }
    }
    return out;
}

double df_estimate(const Problem& problem, const ExclusiveLassoFit& fit) {
    if (fit.support.empty()) return 0.0;
    const SignBlockSystem sys = sign_block_system(problem, fit);
    const Matrix gram = sys.design_subset.transpose() * sys.design_subset;

    // trace[X_S (system)^+ X_S^T] = trace[(system)^+ X_S^T X_S]
    double trace = 0.0;
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
        trace += pinv_solve(sys.system, gram.col(j))[j];
    }
    return trace;
}

double bic_value(double rss, double df, Eigen::Index n) {
    if (rss == 0.0) throw PerfectFit("bic: zero residual sum of squares");
    const double dn = static_cast<double>(n);
    return std::log(rss / dn) + df * std::log(dn) / dn;
}

double bic(const Problem& problem, const ExclusiveLassoFit& fit, double df) {
    const double rss =
        (problem.response - problem.design * fit.coefficients.values).squaredNorm();
    return bic_value(rss, df, problem.n());
}

double ebic_value(double rss, double df, Eigen::Index n, Eigen::Index p) {
    return bic_value(rss, df, n) +
           df * std::log(static_cast<double>(p)) / static_cast<double>(n);
}

double ebic(const Problem& problem, const ExclusiveLassoFit& fit, double df) {
    const double rss =
        (problem.response - problem.design * fit.coefficients.values).squaredNorm();
    return ebic_value(rss, df, problem.n(), problem.p());
}

SelectionResult select_lambda(const PathResult& path, Criterion criterion,
                              bool threshold_groupwise) {
    if (path.fits.empty()) throw EmptyPath("select_lambda: empty path");
    const std::vector<double>& values =
        criterion == Criterion::BIC ? path.bic : path.ebic;

    int best = -1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) continue;
        // Grid is descending, so keeping the first strict minimum breaks
        // ties toward larger lambda.
        if (best < 0 || values[i] < values[static_cast<std::size_t>(best)]) {
            best = static_cast<int>(i);
        }
    }
    if (best < 0) throw NoFiniteCriterion("select_lambda: no finite criterion value");

    SelectionResult result;
    result.lambda = path.lambdas[static_cast<std::size_t>(best)];
    result.criterion = criterion;
    result.values = values;
    result.chosen_index = best;
    result.fit = path.fits[static_cast<std::size_t>(best)];
    if (threshold_groupwise) result.thresholded = groupwise_threshold(result.fit);
    return result;
}

Vector groupwise_threshold(const Vector& beta, const GroupPartition& partition) {
    Vector out = Vector::Zero(beta.size());
    for (const std::vector<int>& idx : partition.groups()) {
        int keep = -1;
        double best = 0.0;
        for (int i : idx) {  // ascending order, so ties keep the smallest index
            if (std::abs(beta[i]) > best) {
                best = std::abs(beta[i]);
                keep = i;
            }
        }
        if (keep >= 0) out[keep] = beta[keep];
    }
    return out;
}

Coefficients groupwise_threshold(const ExclusiveLassoFit& fit) {
    return Coefficients{
        groupwise_threshold(fit.coefficients.values, *fit.coefficients.partition),
        fit.coefficients.partition};
}

}  // namespace exlasso
