#pragma once

// Independent brute-force oracle for the exclusive penalty's proximal
// operator: enumerate every sign pattern in {-1, 0, +1}^p, solve the
// pattern's quadratic in closed form, keep feasible stationary points,
// and return the best objective seen. Exponential, so only for p <= ~10.

#include <cmath>
#include <vector>

#include "exlasso/groups.hpp"
#include "exlasso/types.hpp"

namespace exlasso::testing {

inline double prox_objective(const Vector& beta, const Vector& z, double lambda,
                             const GroupPartition& partition) {
    double value = 0.5 * (beta - z).squaredNorm();
    for (const std::vector<int>& group : partition.groups()) {
        double l1 = 0.0;
        for (int i : group) l1 += std::abs(beta[i]);
        value += 0.5 * lambda * l1 * l1;
    }
    return value;
}

struct ProxOracleResult {
    Vector minimizer;
    double objective = 0.0;
};

inline ProxOracleResult prox_oracle(const Vector& z, double lambda,
                                    const GroupPartition& partition) {
    const int p = static_cast<int>(z.size());
    std::vector<int> pattern(static_cast<std::size_t>(p), -1);

    ProxOracleResult best;
    best.minimizer = Vector::Zero(p);
    best.objective = prox_objective(best.minimizer, z, lambda, partition);

    const long long total = static_cast<long long>(std::pow(3.0, p) + 0.5);
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        std::vector<int> active;
        for (int i = 0; i < p; ++i) {
            pattern[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3) - 1;
            rest /= 3;
            if (pattern[static_cast<std::size_t>(i)] != 0) active.push_back(i);
        }
        if (active.empty()) continue;  // the zero pattern was scored above

        const Eigen::Index m = static_cast<Eigen::Index>(active.size());
        Matrix system = Matrix::Identity(m, m);
        Vector rhs(m);
        for (Eigen::Index a = 0; a < m; ++a) {
            rhs[a] = z[active[static_cast<std::size_t>(a)]];
            for (Eigen::Index b = 0; b < m; ++b) {
                const int ia = active[static_cast<std::size_t>(a)];
                const int ib = active[static_cast<std::size_t>(b)];
                if (partition.group_of(ia) == partition.group_of(ib)) {
                    system(a, b) += lambda * pattern[static_cast<std::size_t>(ia)] *
                                    pattern[static_cast<std::size_t>(ib)];
                }
            }
        }
        const Vector solution = system.ldlt().solve(rhs);

        bool feasible = true;
        for (Eigen::Index a = 0; a < m && feasible; ++a) {
            feasible = pattern[static_cast<std::size_t>(active[static_cast<std::size_t>(a)])] *
                           solution[a] >=
                       -1e-12;
        }
        if (!feasible) continue;

        Vector candidate = Vector::Zero(p);
        for (Eigen::Index a = 0; a < m; ++a) {
            candidate[active[static_cast<std::size_t>(a)]] = solution[a];
        }
        const double objective = prox_objective(candidate, z, lambda, partition);
        if (objective < best.objective) {
            best.objective = objective;
            best.minimizer = candidate;
        }
    }
    return best;
}

}  // namespace exlasso::testing
