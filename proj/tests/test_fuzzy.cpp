#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "partlat/errors.hpp"
#include "partlat/fuzzy.hpp"
#include "partlat/lattice.hpp"
#include "partlat/metrics.hpp"

using namespace partlat;
using fixtures::parse;

namespace {

FuzzyPartition vec(std::size_t n, std::vector<double> coords) { return {n, std::move(coords)}; }

}  // namespace

TEST_CASE("embedding of the worked example") {
    const auto y = embed(fixtures::example3_first());
    const auto z = embed(fixtures::example3_second());
    const double ey[] = {0.28, 0.14, 0.15, 0.56, 0.30, 0.40};
    const double ez[] = {0.38, 0.18, 0.12, 0.24, 0.10, 0.38};
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(y.coords[k] == doctest::Approx(ey[k]).epsilon(1e-12));
        CHECK(z.coords[k] == doctest::Approx(ez[k]).epsilon(1e-12));
    }
    CHECK(fuzzy_distance(y, z, Norm::L1) == doctest::Approx(0.71).epsilon(1e-12));
}

TEST_CASE("printed convex combinations validate") {
    const auto y = embed(fixtures::example3_first());
    const auto z = embed(fixtures::example3_second());
    const std::vector<std::pair<Partition, double>> first{
        {parse("1234"), 0.14},   {parse("124|3"), 0.01},  {parse("12|34"), 0.13},  {parse("1|234"), 0.13},
        {parse("1|24|3"), 0.02}, {parse("1|23|4"), 0.29}, {parse("1|2|3|4"), 0.28}};
    const std::vector<std::pair<Partition, double>> alternative{
        {parse("14|2|3"), 0.15}, {parse("123|4"), 0.14}, {parse("12|3|4"), 0.14}, {parse("1|234"), 0.3},
        {parse("1|2|34"), 0.1},  {parse("1|23|4"), 0.12}, {parse("1|2|3|4"), 0.05}};
    const std::vector<std::pair<Partition, double>> second{
        {parse("1234"), 0.1},    {parse("14|2|3"), 0.02}, {parse("13|2|4"), 0.08}, {parse("1|23|4"), 0.14},
        {parse("12|3|4"), 0.28}, {parse("1|2|34"), 0.28}, {parse("1|2|3|4"), 0.1}};
    CHECK(combination_residual(first, y) < 1e-12);
    CHECK(combination_residual(alternative, y) < 1e-12);
    CHECK(combination_residual(second, z) < 1e-12);
    CHECK(combination_residual(second, y) > 0.1);
}

TEST_CASE("greedy decomposition follows the worked trace") {
    const auto y = embed(fixtures::example3_first());
    const auto c = decompose_greedy(y);
    REQUIRE(c.success);
    const std::vector<std::pair<std::string, double>> expected{
        {"1234", 0.14}, {"124|3", 0.01}, {"12|34", 0.13}, {"1|234", 0.13},
        {"1|24|3", 0.02}, {"1|23|4", 0.29}, {"1|2|3|4", 0.28}};
    REQUIRE(c.terms.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CHECK(to_block_string(c.terms[k].first) == expected[k].first);
        CHECK(c.terms[k].second == doctest::Approx(expected[k].second).epsilon(1e-12));
    }
}

TEST_CASE("vertices decompose to themselves") {
    for (const auto &p : enumerate(4)) {
        const auto c = decompose(FuzzyPartition::from_partition(p));
        REQUIRE(c.success);
        REQUIRE(c.terms.size() == 1);
        CHECK(c.terms.front().first == p);
        CHECK(c.terms.front().second == 1.0);
    }
}

TEST_CASE("random membership matrices decompose") {
    std::mt19937 rng(31);
    std::size_t fallbacks = 0;
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 2 + t % 5;
        const std::size_t m = 1 + t % n;
        const auto y = embed(fixtures::random_membership(n, m, rng));
        for (double c : y.coords) {
            CHECK(c >= 0.0);
            CHECK(c <= 1.0 + 1e-12);
        }
        const auto c = decompose(y);
        CHECK(c.success);
        CHECK(c.residual_norm <= 1e-9);
        CHECK(combination_residual(c.terms, y) <= 1e-9);
        fallbacks += c.method == DecompositionMethod::Exhaustive;
    }
    CHECK(fallbacks > 0);
}

TEST_CASE("points outside the polytope are reported") {
    // [12] and [23] fully on but [13] off violates transitivity
    const auto c = decompose(vec(3, {1.0, 0.0, 1.0}));
    CHECK_FALSE(c.success);
    CHECK(c.residual_norm > 1e-9);
}

TEST_CASE("hard matrices embed to indicators") {
    std::mt19937 rng(2);
    for (int t = 0; t < 100; ++t) {
        const auto p = fixtures::random_partition(1 + t % 8, rng);
        const auto y = embed(MembershipMatrix::from_partition(p));
        CHECK(y.coords == FuzzyPartition::from_partition(p).coords);
    }
    const auto all_ones = MembershipMatrix(3, 1, {1.0, 1.0, 1.0});
    CHECK(embed(all_ones).coords == std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("membership validation") {
    CHECK_THROWS_AS(MembershipMatrix(2, 2, {0.5, 0.4, 0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(MembershipMatrix(1, 2, {1.2, -0.2}), std::invalid_argument);
    CHECK_THROWS_AS(MembershipMatrix(2, 2, {0.5, 0.5, 1.0, 0.0}, std::vector<std::vector<std::size_t>>{{0}, {0, 1}}),
                    std::invalid_argument);
    CHECK_NOTHROW(MembershipMatrix(1, 2, {0.5, 0.5 + 1e-7}, std::nullopt, 1e-6));
}

TEST_CASE("distances on vertices") {
    const auto p = parse("123|456|7");
    const auto q = parse("1|2|34|5|67");
    CHECK(fuzzy_distance(FuzzyPartition::from_partition(p), FuzzyPartition::from_partition(q), Norm::L1) == 8.0);
    CHECK(fuzzy_distance(FuzzyPartition::from_partition(Partition::bottom(5)),
                         FuzzyPartition::from_partition(Partition::top(5)), Norm::L2) ==
          doctest::Approx(std::sqrt(10.0)));
    CHECK_THROWS_AS(fuzzy_distance(vec(2, {0.1}), vec(3, {0, 0, 0}), Norm::L1), SizeMismatch);
}

TEST_CASE("order and meet") {
    CHECK(fuzzy_leq(vec(3, {0.3, 0, 0}), vec(3, {0.5, 0, 0})));
    CHECK_FALSE(fuzzy_leq(vec(3, {0.5, 0, 0}), vec(3, {0.3, 0, 0})));
    const auto all = enumerate(4);
    for (const auto &p : all) {
        for (const auto &q : all) {
            const auto yp = FuzzyPartition::from_partition(p), yq = FuzzyPartition::from_partition(q);
            CHECK(fuzzy_leq(yp, yq) == leq(p, q));
            CHECK(fuzzy_meet(yp, yq).coords == FuzzyPartition::from_partition(meet(p, q)).coords);
        }
    }
    const auto m = fuzzy_meet(FuzzyPartition::from_partition(parse("135|27|46")),
                              FuzzyPartition::from_partition(parse("1|23|47|56")));
    CHECK(m.coords == std::vector<double>(21, 0.0));
}

TEST_CASE("closure join reproduces the lattice join") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto all = enumerate(n);
        for (const auto &p : all) {
            for (const auto &q : all) {
                const auto j = fuzzy_join(FuzzyPartition::from_partition(p), FuzzyPartition::from_partition(q),
                                          JoinMode::Closure);
                CHECK(j.coords == FuzzyPartition::from_partition(join(p, q)).coords);
            }
        }
    }
}

TEST_CASE("one-step join") {
    const auto a = FuzzyPartition::from_partition(parse("12|3"));
    const auto b = FuzzyPartition::from_partition(parse("1|23"));
    CHECK(fuzzy_join(a, b, JoinMode::OneStep).coords == std::vector<double>{1, 1, 1});

    const auto p = FuzzyPartition::from_partition(parse("12|34"));
    const auto q = FuzzyPartition::from_partition(parse("1|23|4"));
    const auto once = fuzzy_join(p, q, JoinMode::OneStep);
    CHECK(once.at(0, 3) == 0.0);
    CHECK(fuzzy_join(p, q, JoinMode::Closure).coords == std::vector<double>(6, 1.0));
}

TEST_CASE("l1 and l2 identities around the meet") {
    std::mt19937 rng(77);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 2 + t % 6;
        const auto y = fixtures::random_fuzzy(n, rng);
        const auto z = fixtures::random_fuzzy(n, rng);
        const auto m = fuzzy_meet(y, z);
        double lhs15 = 0.0, lhs16 = 0.0, rhs15 = 0.0, rhs16 = 0.0;
        lhs15 = fuzzy_distance(y, m, Norm::L1) + fuzzy_distance(m, z, Norm::L1) - fuzzy_distance(y, z, Norm::L1);
        const auto sq = [](double x) { return x * x; };
        lhs16 = sq(fuzzy_distance(y, m, Norm::L2)) + sq(fuzzy_distance(m, z, Norm::L2)) -
                sq(fuzzy_distance(y, z, Norm::L2));
        for (std::size_t k = 0; k < y.coords.size(); ++k) {
            const double a = y.coords[k], b = z.coords[k];
            rhs15 += 2.0 * (std::min(a, b) - a * b);
            rhs16 += 2.0 * a * b * (1.0 - a - b + a * b);
        }
        CHECK(std::abs(lhs15 - rhs15) < 1e-9);
        CHECK(std::abs(lhs16 - rhs16) < 1e-9);

        // ordered chain y >= y*u >= y*u*v
        const auto u = fixtures::random_fuzzy(n, rng);
        const auto mid = fuzzy_meet(y, u);
        const auto low = fuzzy_meet(mid, fixtures::random_fuzzy(n, rng));
        CHECK(fuzzy_leq(mid, y));
        CHECK(fuzzy_leq(low, mid));
        CHECK(std::abs(fuzzy_distance(y, mid, Norm::L1) + fuzzy_distance(mid, low, Norm::L1) -
                       fuzzy_distance(y, low, Norm::L1)) < 1e-9);
    }
}
