#include "exlasso/prox.hpp"

#include <cmath>
#include <string>

#include "exlasso/errors.hpp"

namespace exlasso {

Vector prox_group(const Vector& z_g, double lambda, double tol, int max_sweeps,
                  int* sweeps_used, double* final_change, bool* hit_cap,
                  const Vector* initial) {
    if (lambda < 0.0) throw Error("prox_group: lambda must be nonnegative");
    if (tol <= 0.0) throw Error("prox_group: tolerance must be positive");

    Vector beta = initial ? *initial : z_g;
    const Eigen::Index m = z_g.size();
    const double scale = 1.0 / (1.0 + lambda);

    int sweeps = 0;
    double change = 0.0;
    bool capped = true;
    while (sweeps < max_sweeps) {
        ++sweeps;
        double total = beta.lpNorm<1>();  // refreshed per sweep so drift cannot build up
        change = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) {
            const double rest = total - std::abs(beta[i]);
            const double updated = soft_threshold(z_g[i], lambda * rest) * scale;
            change = std::max(change, std::abs(updated - beta[i]));
            total += std::abs(updated) - std::abs(beta[i]);
            beta[i] = updated;
        }
        if (change <= tol) {
            capped = false;
            break;
        }
    }
    if (sweeps_used) *sweeps_used = sweeps;
    if (final_change) *final_change = change;
    if (hit_cap) *hit_cap = capped;
    return beta;
}

ProxResult prox_exclusive(const ProxRequest& request) {
    if (!request.partition) throw Error("prox_exclusive: missing partition");
    const GroupPartition& partition = *request.partition;
    if (request.point.size() != partition.p()) {
        throw DimensionMismatch("prox_exclusive: point has length " +
                                std::to_string(request.point.size()) +
                                " but partition covers " + std::to_string(partition.p()));
    }
    if (request.lambda < 0.0) throw Error("prox_exclusive: lambda must be nonnegative");

    const int num_groups = partition.num_groups();
    ProxResult result;
    result.minimizer.resize(request.point.size());
    result.sweeps_used.resize(num_groups);
    result.final_change.resize(num_groups);

    for (int g = 0; g < num_groups; ++g) {
        const std::vector<int>& idx = partition.group(g);
        const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
        Vector z_g(m), init_g(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            z_g[i] = request.point[idx[i]];
            init_g[i] = request.warm_start ? (*request.warm_start)[idx[i]] : z_g[i];
        }
        bool capped = false;
        const Vector beta_g =
            prox_group(z_g, request.lambda, request.inner_tolerance, request.max_sweeps,
                       &result.sweeps_used[g], &result.final_change[g], &capped, &init_g);
        result.max_sweeps_hit = result.max_sweeps_hit || capped;
        for (Eigen::Index i = 0; i < m; ++i) result.minimizer[idx[i]] = beta_g[i];
    }
    return result;
}

}  // namespace exlasso
