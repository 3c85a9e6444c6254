#include <doctest.h>

#include <algorithm>
#include <random>

#include "exlasso/baselines.hpp"
#include "exlasso/errors.hpp"
#include "exlasso/numerics.hpp"
#include "exlasso/prox.hpp"
#include "exlasso/rng.hpp"
#include "support/fixtures.hpp"

using namespace exlasso;
using exlasso::testing::figure2_problem;
using exlasso::testing::random_matrix;
using exlasso::testing::random_problem;

namespace {

Problem orthonormal_problem(int n, int p, int groups, std::mt19937_64& eng) {
    const Matrix q = Eigen::HouseholderQR<Matrix>(
                         exlasso::testing::random_matrix(n, p, eng))
                         .householderQ() *
                     Matrix::Identity(n, p);
    return make_problem(q, rng::standard_normal(n, eng),
                        GroupPartition::contiguous_blocks(p, groups));
}

}  // namespace

TEST_CASE("lasso_fit closed forms") {
    std::mt19937_64 eng = rng::engine(211);
    const Problem problem = orthonormal_problem(40, 8, 2, eng);
    const Vector xty = problem.design.transpose() * problem.response;

    SolverConfig config;
    config.outer_tolerance = 1e-12;

    // Orthonormal design: coordinatewise soft threshold of X^T y.
    const double lambda = 0.4;
    const Vector beta = lasso_fit(problem, lambda, config);
    for (int i = 0; i < 8; ++i) {
        CHECK(beta[i] == doctest::Approx(soft_threshold(xty[i], lambda)).epsilon(1e-8));
    }

    // lambda = 0 on a full-rank design is least squares.
    const Problem dense = random_problem(30, 6, 2, eng);
    const Vector at_zero = lasso_fit(dense, 0.0, config);
    CHECK((at_zero - ols_solve(dense.design, dense.response)).lpNorm<Eigen::Infinity>() <
          1e-6);

    // Above the critical lambda everything is zero.
    const double top = (dense.design.transpose() * dense.response).cwiseAbs().maxCoeff();
    CHECK(lasso_fit(dense, top * 1.0000001, config).norm() == 0.0);
}

TEST_CASE("lasso_fit satisfies its stationarity conditions") {
    std::mt19937_64 eng = rng::engine(223);
    SolverConfig config;
    config.outer_tolerance = 1e-11;
    for (int rep = 0; rep < 10; ++rep) {
        const Problem problem = random_problem(40, 15, 3, eng);
        const double lambda = 0.2 * lambda_max_heuristic(problem);
        const Vector beta = lasso_fit(problem, lambda, config);
        const Vector corr =
            problem.design.transpose() * (problem.response - problem.design * beta);
        for (int i = 0; i < 15; ++i) {
            if (std::abs(beta[i]) > 1e-10) {
                CHECK(std::abs(corr[i] - lambda * (beta[i] > 0 ? 1.0 : -1.0)) < 1e-6);
            } else {
                CHECK(std::abs(corr[i]) <= lambda + 1e-6);
            }
        }
    }
}

TEST_CASE("lasso_first_k finds supports of the requested size") {
    std::mt19937_64 eng = rng::engine(227);

    // k = p with a grid reaching almost zero selects everything.
    const Problem dense = random_problem(40, 6, 2, eng);
    const SelectedModel all = lasso_first_k(dense, 6);
    CHECK(all.support.size() == 6);

    // Orthonormal design, k = 2: the two largest |X_i^T y|.
    const Problem ortho = orthonormal_problem(30, 7, 1, eng);
    const Vector xty = (ortho.design.transpose() * ortho.response).cwiseAbs();
    std::vector<int> order(7);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return xty[a] > xty[b]; });
    const SelectedModel top2 = lasso_first_k(ortho, 2);
    REQUIRE(top2.support.size() == 2);
    CHECK(std::find(top2.support.begin(), top2.support.end(), order[0]) !=
          top2.support.end());
    CHECK(std::find(top2.support.begin(), top2.support.end(), order[1]) !=
          top2.support.end());

    CHECK_THROWS_AS(lasso_first_k(dense, 0), Error);
}

TEST_CASE("thresholded selectors return one index per group") {
    const Problem problem = figure2_problem(229);

    const SelectedModel lasso_thresh = thresholded_lasso(problem);
    const SelectedModel path_thresh = thresholded_reg_path(problem);
    const SelectedModel marginal_thresh = groupwise_marginal(problem);

    for (const SelectedModel* model : {&lasso_thresh, &path_thresh, &marginal_thresh}) {
        std::vector<int> per_group(5, 0);
        for (int i : model->support) ++per_group[problem.partition->group_of(i)];
        for (int c : per_group) CHECK(c <= 1);
        if (!model->fallback_flagged) {
            for (int c : per_group) CHECK(c == 1);
        }
    }
}

TEST_CASE("orthonormal designs make every groupwise selector marginal") {
    std::mt19937_64 eng = rng::engine(233);
    const Problem problem = orthonormal_problem(40, 9, 3, eng);
    const Vector xty = (problem.design.transpose() * problem.response).cwiseAbs();

    std::vector<int> expected;
    for (int g = 0; g < 3; ++g) {
        int best = problem.partition->group(g).front();
        for (int i : problem.partition->group(g)) {
            if (xty[i] > xty[best]) best = i;
        }
        expected.push_back(best);
    }

    CHECK(groupwise_marginal(problem).support == expected);
    CHECK(thresholded_lasso(problem).support == expected);
    CHECK(thresholded_reg_path(problem).support == expected);
}

TEST_CASE("marginal regression ranks by absolute correlation") {
    const Problem problem = make_problem(Matrix::Identity(3, 3), Vector{{3.0, 1.0, 2.0}},
                                         GroupPartition::singletons(3));
    const SelectedModel top2 = marginal_regression(problem, 2);
    CHECK(top2.support == std::vector<int>{0, 2});

    const SelectedModel everything = marginal_regression(problem, 3);
    CHECK(everything.support == std::vector<int>{0, 1, 2});

    // Positive rescaling of y cannot change the ranking.
    Problem scaled = problem;
    scaled.response *= 42.0;
    CHECK(marginal_regression(scaled, 2).support == top2.support);
    CHECK_THROWS_AS(marginal_regression(problem, 4), Error);
}

TEST_CASE("groupwise marginal on an identity design") {
    const Problem problem = make_problem(Matrix::Identity(3, 3), Vector{{1.0, -4.0, 2.0}},
                                         GroupPartition({{0, 1}, {2}}, 3));
    CHECK(groupwise_marginal(problem).support == std::vector<int>{1, 2});

    // A single group agrees with marginal regression at k = 1.
    const Problem single = make_problem(Matrix::Identity(3, 3), Vector{{1.0, -4.0, 2.0}},
                                        GroupPartition({{0, 1, 2}}, 3));
    CHECK(groupwise_marginal(single).support == marginal_regression(single, 1).support);
}

TEST_CASE("groupwise lasso handles orthogonal groups independently") {
    // Two groups living on disjoint row blocks; each block's signal is exact.
    std::mt19937_64 eng = rng::engine(239);
    Matrix x = Matrix::Zero(20, 4);
    x.block(0, 0, 10, 2) = random_matrix(10, 2, eng);
    x.block(10, 2, 10, 2) = random_matrix(10, 2, eng);
    Vector beta_star = Vector::Zero(4);
    beta_star[0] = 2.0;
    beta_star[3] = -1.5;
    const Vector y = x * beta_star + 0.01 * rng::standard_normal(20, eng);
    const Problem problem = make_problem(x, y, GroupPartition({{0, 1}, {2, 3}}, 4));

    const SelectedModel model = groupwise_lasso(problem);
    CHECK(std::find(model.support.begin(), model.support.end(), 0) != model.support.end());
    CHECK(std::find(model.support.begin(), model.support.end(), 3) != model.support.end());
}

TEST_CASE("ols_refit on the selected support") {
    std::mt19937_64 eng = rng::engine(241);
    const Problem problem = random_problem(30, 8, 2, eng);

    const Coefficients full = ols_refit(problem, {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK((full.values - ols_solve(problem.design, problem.response))
              .lpNorm<Eigen::Infinity>() < 1e-10);

    const std::vector<int> support = {1, 5};
    const Coefficients restricted = ols_refit(problem, support);
    CHECK(restricted.values[0] == 0.0);
    const Vector residual = problem.response - problem.design * restricted.values;
    for (int i : support) CHECK(std::abs(problem.design.col(i).dot(residual)) < 1e-8);

    CHECK_THROWS_AS(ols_refit(problem, {}), EmptySupport);
}
