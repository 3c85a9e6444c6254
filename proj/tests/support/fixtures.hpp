#pragma once

// Shared construction helpers for solver-level tests.

#include <memory>
#include <random>

#include "exlasso/problem.hpp"
#include "exlasso/rng.hpp"
#include "exlasso/simulate.hpp"

namespace exlasso::testing {

inline Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& eng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = normal(eng);
    }
    return m;
}

inline Problem random_problem(int n, int p, int groups, std::mt19937_64& eng) {
    return make_problem(random_matrix(n, p, eng), rng::standard_normal(n, eng),
                        GroupPartition::contiguous_blocks(p, groups));
}

/// Correlated design with planted one-per-group signal, after the paper's
/// toy path example: n = 20, p = 30, five groups.
inline Problem figure2_problem(std::uint64_t seed, Vector* beta_star_out = nullptr) {
    const int n = 20, p = 30, groups = 5;
    auto partition = std::make_shared<const GroupPartition>(
        GroupPartition::contiguous_blocks(p, groups));
    ToeplitzSpec tspec{p, partition, 0.7, 0.4};
    const Matrix x = sample_design(toeplitz_sigma(tspec), n, seed);

    std::mt19937_64 eng = rng::engine(seed + 1);
    Vector beta_star = Vector::Zero(p);
    for (int g = 0; g < groups; ++g) {
        const std::vector<int>& idx = partition->group(g);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(idx.size()) - 1);
        beta_star[idx[static_cast<std::size_t>(pick(eng))]] = 1.0;
    }
    const Vector y = x * beta_star + rng::standard_normal(n, eng);
    if (beta_star_out) *beta_star_out = beta_star;
    return make_problem(x, y, partition);
}

}  // namespace exlasso::testing
