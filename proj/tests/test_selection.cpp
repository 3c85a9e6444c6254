#include <doctest.h>

#include <cmath>
#include <random>

#include "exlasso/errors.hpp"
#include "exlasso/numerics.hpp"
#include "exlasso/rng.hpp"
#include "exlasso/selection.hpp"
#include "support/fixtures.hpp"

using namespace exlasso;
using exlasso::testing::figure2_problem;
using exlasso::testing::random_matrix;
using exlasso::testing::random_problem;

namespace {

ExclusiveLassoFit fit_tight(const Problem& problem, double lambda) {
    SolverConfig config;
    config.outer_tolerance = 1e-10;
    return fit(problem, lambda, config);
}

}  // namespace

TEST_CASE("df equals the rank of X_S at lambda zero") {
    std::mt19937_64 eng = rng::engine(73);
    const Problem problem = random_problem(30, 8, 2, eng);
    const ExclusiveLassoFit result = fit_tight(problem, 0.0);
    REQUIRE(result.support.size() == 8);
    CHECK(df_estimate(problem, result) == doctest::Approx(8.0).epsilon(1e-8));

    ExclusiveLassoFit empty;
    empty.coefficients = Coefficients{Vector::Zero(8), problem.partition};
    empty.lambda = 1.0;
    CHECK(df_estimate(problem, empty) == 0.0);
}

TEST_CASE("df with one orthonormal active column per group is |S|/(1+lambda)") {
    std::mt19937_64 eng = rng::engine(79);
    const Matrix q = Eigen::HouseholderQR<Matrix>(random_matrix(40, 6, eng))
                         .householderQ() *
                     Matrix::Identity(40, 6);
    const Problem problem = make_problem(q, rng::standard_normal(40, eng),
                                         GroupPartition({{0, 1}, {2, 3}, {4, 5}}, 6));

    ExclusiveLassoFit fake;
    Vector beta = Vector::Zero(6);
    beta[0] = 1.0;
    beta[2] = -2.0;
    beta[4] = 0.5;
    fake.coefficients = Coefficients{beta, problem.partition};
    fake.lambda = 0.7;
    fake.support = support_set(beta);

    CHECK(df_estimate(problem, fake) == doctest::Approx(3.0 / 1.7).epsilon(1e-8));
}

TEST_CASE("df for singleton groups matches the ridge formula") {
    std::mt19937_64 eng = rng::engine(83);
    const Matrix x = random_matrix(30, 10, eng);
    const Vector y = rng::standard_normal(30, eng);
    const Problem problem = make_problem(x, y, GroupPartition::singletons(10));
    const double lambda = 2.5;
    const ExclusiveLassoFit result = fit_tight(problem, lambda);
    REQUIRE(result.support.size() == 10);

    Eigen::JacobiSVD<Matrix> svd(x);
    double expected = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double d2 = svd.singularValues()[i] * svd.singularValues()[i];
        expected += d2 / (d2 + lambda);
    }
    CHECK(df_estimate(problem, result) == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("df is invariant to within-group column reordering") {
    const Problem problem = figure2_problem(89);
    const double lambda = 0.3 * lambda_max_heuristic(problem);
    const ExclusiveLassoFit result = fit_tight(problem, lambda);
    const double base = df_estimate(problem, result);

    // Swap two columns of the same group along with the fit entries.
    const std::vector<int>& group0 = problem.partition->group(0);
    REQUIRE(group0.size() >= 2);
    const int a = group0[0], b = group0[1];
    Problem swapped = problem;
    swapped.design.col(a).swap(swapped.design.col(b));
    ExclusiveLassoFit moved = result;
    std::swap(moved.coefficients.values[a], moved.coefficients.values[b]);
    moved.support = support_set(moved.coefficients.values);

    CHECK(df_estimate(swapped, moved) == doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("df stays within its analytic bounds along a path") {
    const Problem problem = figure2_problem(97);
    const PathResult path = fit_path(problem, default_lambda_grid(problem));
    for (std::size_t i = 0; i < path.fits.size(); ++i) {
        CHECK(path.df[i] >= -1e-8);
        CHECK(path.df[i] <=
              std::min<double>(static_cast<double>(problem.n()),
                               static_cast<double>(path.fits[i].support.size())) +
                  1e-8);
    }
}

TEST_CASE("bic and ebic formulas") {
    std::mt19937_64 eng = rng::engine(101);
    const Problem problem = random_problem(40, 10, 2, eng);

    // df = 0 with a zero prediction: log(||y||^2 / n).
    ExclusiveLassoFit zero;
    zero.coefficients = Coefficients{Vector::Zero(10), problem.partition};
    zero.lambda = 1.0;
    CHECK(bic(problem, zero, 0.0) ==
          doctest::Approx(std::log(problem.response.squaredNorm() / 40.0)));
    CHECK(ebic(problem, zero, 0.0) == doctest::Approx(bic(problem, zero, 0.0)));

    // Equal residuals order by df.
    CHECK(bic(problem, zero, 2.0) > bic(problem, zero, 1.0));

    // Independent re-evaluation of both formulas.
    const ExclusiveLassoFit result = fit_tight(problem, 0.5);
    const double df = df_estimate(problem, result);
    const double rss =
        (problem.response - problem.design * result.coefficients.values).squaredNorm();
    CHECK(bic(problem, result, df) ==
          doctest::Approx(std::log(rss / 40.0) + df * std::log(40.0) / 40.0).epsilon(1e-12));
    CHECK(ebic(problem, result, df) - bic(problem, result, df) ==
          doctest::Approx(df * std::log(10.0) / 40.0).epsilon(1e-12));
}

TEST_CASE("perfect fits are reported, not clamped") {
    const Problem problem = make_problem(Matrix::Identity(3, 3), Vector{{1.0, 2.0, 3.0}},
                                         GroupPartition::singletons(3));
    ExclusiveLassoFit exact;
    exact.coefficients = Coefficients{Vector{{1.0, 2.0, 3.0}}, problem.partition};
    exact.lambda = 0.0;
    exact.support = {0, 1, 2};
    CHECK_THROWS_AS(bic(problem, exact, 3.0), PerfectFit);
}

TEST_CASE("select_lambda picks the argmin with ties toward larger lambda") {
    const Problem problem = figure2_problem(103);

    PathResult single = fit_path(problem, {1.0});
    const SelectionResult only = select_lambda(single, Criterion::BIC);
    CHECK(only.lambda == 1.0);
    CHECK(only.chosen_index == 0);

    // Hand-built criterion profile with a tie: the larger lambda wins.
    PathResult path = fit_path(problem, {3.0, 2.0, 1.0});
    path.bic = {5.0, 4.0, 4.0};
    const SelectionResult tied = select_lambda(path, Criterion::BIC);
    CHECK(tied.lambda == 2.0);

    path.bic = {std::nan(""), std::nan(""), std::nan("")};
    CHECK_THROWS_AS(select_lambda(path, Criterion::BIC), NoFiniteCriterion);
}

TEST_CASE("select_lambda finds an interior minimum on a real path") {
    const Problem problem = figure2_problem(107);
    const PathResult path = fit_path(problem, default_lambda_grid(problem));
    const SelectionResult chosen = select_lambda(path, Criterion::EBIC);
    CHECK(chosen.criterion == Criterion::EBIC);
    CHECK(chosen.values[static_cast<std::size_t>(chosen.chosen_index)] <=
          *std::min_element(chosen.values.begin(), chosen.values.end()) + 1e-12);
}

TEST_CASE("groupwise threshold keeps one coefficient per touched group") {
    GroupPartition partition({{0, 1}, {2}}, 3);
    auto shared = std::make_shared<const GroupPartition>(partition);

    const Vector kept = groupwise_threshold(Vector{{1.0, -3.0, 2.0}}, partition);
    CHECK(kept[0] == 0.0);
    CHECK(kept[1] == -3.0);
    CHECK(kept[2] == 2.0);

    // Tied magnitudes keep the smallest index.
    const Vector tied = groupwise_threshold(Vector{{2.0, 2.0}}, GroupPartition({{0, 1}}, 2));
    CHECK(tied[0] == 2.0);
    CHECK(tied[1] == 0.0);

    // Idempotent, and all-zero groups stay zero.
    const Vector zeros = groupwise_threshold(Vector{{0.0, 0.0, 1.5}}, partition);
    CHECK(zeros[2] == 1.5);
    CHECK((groupwise_threshold(zeros, partition) - zeros).norm() == 0.0);
    CHECK((groupwise_threshold(kept, partition) - kept).norm() == 0.0);
}
