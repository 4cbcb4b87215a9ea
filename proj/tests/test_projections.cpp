#include <doctest.h>

#include <cmath>

#include "ruzsakit/errors.hpp"
#include "ruzsakit/projections.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ruzsakit;

namespace {

const PointSet kL(2, {{0, 0}, {0, 1}, {1, 0}});

PointSet product(std::size_t a, std::size_t b) {
    std::vector<GroundElement> pts;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) pts.push_back({std::int64_t(i), std::int64_t(j)});
    return PointSet(2, pts);
}

}  // namespace

TEST_CASE("index sets") {
    CHECK(IndexSet{3, 1}.indices() == std::vector<std::size_t>{1, 3});
    CHECK_THROWS_AS(IndexSet({1, 1}), IndexError);
    CHECK_THROWS_AS(IndexSet({0}), IndexError);
    CHECK_THROWS_AS(IndexSet{4}.check_within(3), IndexError);
    CHECK(set_union(IndexSet{1}, IndexSet{3}) == IndexSet{1, 3});
    CHECK(set_intersection(IndexSet{1, 2}, IndexSet{2, 3}) == IndexSet{2});
}

TEST_CASE("project_set") {
    CHECK(project_set(kL, {1}) == PointSet(1, {{0}, {1}}));
    CHECK(project_set(kL, {1, 2}) == kL);
    const PointSet single(3, {{4, 5, 6}});
    CHECK(project_set(single, {2}).size() == 1);
    CHECK(project_set(single, {1, 3}).size() == 1);
    CHECK_THROWS_AS(project_set(kL, IndexSet{}), IndexError);
    CHECK_THROWS_AS(project_set(kL, {3}), IndexError);
    CHECK_THROWS_AS(PointSet(2, {{0, 0}, {0, 0}}), SchemaError);
    CHECK_THROWS_AS(PointSet(2, {{0}}), SchemaError);
}

TEST_CASE("project_rv") {
    const auto diag = RationalDist::uniform({{0, 0}, {1, 1}});
    CHECK(project_rv(diag, {1}) == RationalDist::uniform({{0}, {1}}));
    CHECK(project_rv(diag, {1, 2}) == diag);
    Rational two_thirds(2, 3), third(1, 3);
    const auto L = RationalDist::uniform(kL.points());
    CHECK(project_rv(L, {1}) == RationalDist({{0}, {1}}, {two_thirds, third}));
}

TEST_CASE("s_star") {
    CHECK(s_star({3, 5}) == IndexSet{1, 2});
    CHECK(s_star({1, 4}).empty());
    CHECK(s_star({2}) == IndexSet{1});
    CHECK_THROWS_AS(s_star(IndexSet{}), IndexError);
}

TEST_CASE("conditional_slice") {
    CHECK(conditional_slice(kL, {1}, {0}) == PointSet(2, {{0, 0}, {0, 1}}));
    CHECK(conditional_slice(kL, {1, 2}, {1, 0}) == PointSet(2, {{1, 0}}));
    const auto P = product(2, 3);
    CHECK(conditional_slice(P, {1}, {1}).size() == 3);
    CHECK_THROWS_AS(conditional_slice(kL, {1}, {7}), EmptySliceError);
}

TEST_CASE("conditional average size") {
    CHECK(conditional_avg_size(kL, {2}, {1}) == doctest::Approx(1.5874010519681994).epsilon(1e-14));
    CHECK(conditional_avg_size(kL, {2}, IndexSet{}) == doctest::Approx(2.0).epsilon(1e-15));
    const auto P = product(3, 4);
    CHECK(conditional_avg_size(P, {2}, {1}) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(log_conditional_avg_size(P, {2}, {1}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(log_conditional_avg_size(kL, {2}, {1}, LogBase::e) ==
          doctest::Approx(2.0 / 3.0 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("conditional entropy") {
    const auto L = RationalDist::uniform(kL.points());
    CHECK(conditional_entropy(L, {2}, {1}) == doctest::Approx(0.6666666666666665).epsilon(1e-12));
    const auto cube = RationalDist::uniform(gen::cube(3, 2));
    CHECK(conditional_entropy(cube, {1, 2}, {2}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(conditional_entropy(cube, {2}, {1, 2}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(conditional_entropy(cube, {2}, {1, 2})) <= 1e-12);
}

TEST_CASE("properties") {
    gen::Rng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = gen::uniform(rng, 1, 4);
        const auto X = gen::dist(rng, gen::cube(n, 3), 32, 12);

        // chain rule
        double chain = 0;
        for (std::size_t i = 1; i <= n; ++i) chain += conditional_entropy(X, {i}, IndexSet::range(i - 1));
        CHECK(std::abs(chain - conditional_entropy(X, IndexSet::range(n), {})) <= 1e-9);

        const auto A = gen::point_set(rng, n, 4, 32);
        const auto U = RationalDist::uniform(A.points());
        const IndexSet T = gen::nonempty_subset(rng, n);
        const IndexSet S = gen::nonempty_subset(rng, n);

        // uniform bridge
        const double hs = conditional_entropy(U, T, {});
        const double logsize = std::log2(double(project_set(A, T).size()));
        CHECK(hs <= logsize + 1e-12);
        if (project_rv(U, T) == RationalDist::uniform(project_set(A, T).points()))
            CHECK(std::abs(hs - logsize) <= 1e-12);

        // conditioned-size bridge and independent oracle
        const double lc = log_conditional_avg_size(A, T, S);
        CHECK(conditional_entropy(U, T, S) <= lc + 1e-9);
        CHECK(lc == doctest::Approx(oracle::log_cond_size(A.points(), T.indices(), S.indices())).epsilon(1e-12));

        // relabeling coordinate values leaves sizes unchanged
        std::vector<GroundElement> relabeled;
        for (const auto& x : A.points()) {
            auto c = x.coords;
            for (auto& v : c) v = 10 * (3 - v) + 1;
            relabeled.emplace_back(c);
        }
        CHECK(log_conditional_avg_size(PointSet(n, relabeled), T, S) == doctest::Approx(lc).epsilon(1e-15));
    }
    // product sets factor when S and T are disjoint
    const auto P = product(3, 2);
    CHECK(conditional_avg_size(P, {2}, {1}) == doctest::Approx(double(project_set(P, {2}).size())).epsilon(1e-15));
}
