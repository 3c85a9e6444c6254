#include <doctest.h>

#include <algorithm>
#include <random>

#include "exlasso/errors.hpp"
#include "exlasso/problem.hpp"
#include "exlasso/rng.hpp"

using namespace exlasso;

namespace {

Problem random_problem(int n, int p, int groups, std::mt19937_64& eng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix x(n, p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) x(i, j) = normal(eng);
    }
    return make_problem(x, rng::standard_normal(n, eng),
                        GroupPartition::contiguous_blocks(p, groups));
}

}  // namespace

TEST_CASE("partition validation") {
    CHECK_NOTHROW(validate_partition({{0, 1}, {2}}, 3));

    CHECK_THROWS_AS(validate_partition({{0, 1}, {1, 2}}, 3), OverlappingGroups);
    try {
        validate_partition({{0, 1}, {1, 2}}, 3);
    } catch (const OverlappingGroups& e) {
        REQUIRE(e.indices == std::vector<int>{1});
    }

    CHECK_THROWS_AS(validate_partition({{0}, {2}}, 3), MissingIndices);
    try {
        validate_partition({{0}, {2}}, 3);
    } catch (const MissingIndices& e) {
        REQUIRE(e.indices == std::vector<int>{1});
    }

    CHECK_THROWS_AS(validate_partition({{0, 1, 2}, {}}, 3), EmptyGroup);
}

TEST_CASE("partition lookup structures") {
    GroupPartition partition({{2, 0}, {1, 3}}, 4);
    CHECK(partition.num_groups() == 2);
    CHECK(partition.group(0) == std::vector<int>{0, 2});  // sorted ascending
    CHECK(partition.group_of(0) == 0);
    CHECK(partition.group_of(1) == 1);
    CHECK(partition.group_of(2) == 0);
    CHECK(partition.group_of(3) == 1);

    CHECK(GroupPartition::singletons(3).num_groups() == 3);
    const GroupPartition blocks = GroupPartition::contiguous_blocks(10, 3);
    CHECK(blocks.group(0).size() == 4);
    CHECK(blocks.group(1).size() == 3);
    CHECK(blocks.group(2).size() == 3);
}

TEST_CASE("penalty worked example and special structures") {
    // beta = (1, 2, 3) with groups {1,2} and {3}: (1/2)((1+2)^2 + 3^2) = 9.
    GroupPartition partition({{0, 1}, {2}}, 3);
    CHECK(penalty_value(Vector{{1.0, 2.0, 3.0}}, partition) == doctest::Approx(9.0));

    CHECK(penalty_value(Vector{{0.0, 0.0, 0.0}}, partition) == 0.0);

    // Singleton groups reduce to the ridge penalty.
    CHECK(penalty_value(Vector{{1.0, 2.0}}, GroupPartition::singletons(2)) ==
          doctest::Approx(2.5));

    // One big group squares the l1 norm.
    GroupPartition one({{0, 1, 2}}, 3);
    const Vector beta{{1.0, -2.0, 3.0}};
    CHECK(penalty_value(beta, one) == doctest::Approx(0.5 * 36.0));
}

TEST_CASE("penalty is 2-homogeneous and permutation invariant") {
    std::mt19937_64 eng = rng::engine(41);
    GroupPartition partition({{0, 3, 4}, {1, 2}, {5}}, 6);
    for (int rep = 0; rep < 50; ++rep) {
        const Vector beta = rng::standard_normal(6, eng);
        std::uniform_real_distribution<double> scale_dist(-3.0, 3.0);
        const double c = scale_dist(eng);
        const double base = penalty_value(beta, partition);
        CHECK(penalty_value(c * beta, partition) ==
              doctest::Approx(c * c * base).epsilon(1e-12));
    }

    // Swapping group order and reshuffling indices within a group changes nothing.
    GroupPartition reordered({{5}, {2, 1}, {4, 0, 3}}, 6);
    const Vector beta = rng::standard_normal(6, eng);
    CHECK(penalty_value(beta, partition) == doctest::Approx(penalty_value(beta, reordered)));
}

TEST_CASE("center_response") {
    std::mt19937_64 eng = rng::engine(43);
    Problem problem = random_problem(3, 2, 1, eng);
    problem.response = Vector{{1.0, 2.0, 3.0}};

    const Problem centered = center_response(problem);
    CHECK(centered.response[0] == doctest::Approx(-1.0));
    CHECK(centered.response[1] == doctest::Approx(0.0));
    CHECK(centered.response[2] == doctest::Approx(1.0));
    CHECK(centered.response_mean == doctest::Approx(2.0));
    CHECK(centered.centered);

    // Already centered input is unchanged.
    const Problem again = center_response(centered);
    CHECK((again.response - centered.response).norm() < 1e-15);

    Problem random = random_problem(40, 3, 1, eng);
    CHECK(std::abs(center_response(random).response.mean()) < 1e-12);
}

TEST_CASE("standardize_columns gives unit variance") {
    std::mt19937_64 eng = rng::engine(44);
    Problem problem = random_problem(200, 4, 2, eng);
    problem.design.col(1) *= 7.5;
    const Problem scaled = standardize_columns(problem);
    for (int j = 0; j < 4; ++j) {
        const Vector col = scaled.design.col(j);
        const double var = col.squaredNorm() / 200.0 - std::pow(col.mean(), 2);
        CHECK(var == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("lambda_max heuristic") {
    Problem problem = make_problem(Matrix::Identity(2, 2), Vector{{1.0, -2.0}},
                                   GroupPartition::singletons(2));
    CHECK(lambda_max_heuristic(problem) == doctest::Approx(2.0));

    problem.response.setZero();
    CHECK(lambda_max_heuristic(problem) == 0.0);

    std::mt19937_64 eng = rng::engine(47);
    const Problem random = random_problem(50, 10, 2, eng);
    double brute = 0.0;
    for (int j = 0; j < 10; ++j) {
        brute = std::max(brute, std::abs(random.design.col(j).dot(random.response)));
    }
    CHECK(lambda_max_heuristic(random) == doctest::Approx(brute));
}

TEST_CASE("make_problem validates shapes and finiteness") {
    Matrix x = Matrix::Identity(2, 2);
    CHECK_THROWS_AS(make_problem(x, Vector{{1.0}}, GroupPartition::singletons(2)),
                    DimensionMismatch);
    CHECK_THROWS_AS(make_problem(x, Vector{{1.0, 2.0}}, GroupPartition::singletons(3)),
                    DimensionMismatch);

    Matrix bad = x;
    bad(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(make_problem(bad, Vector{{1.0, 2.0}}, GroupPartition::singletons(2)),
                    NonFiniteEncountered);
}
