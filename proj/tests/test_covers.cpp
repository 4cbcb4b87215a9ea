#include <doctest.h>

#include <algorithm>

#include "ruzsakit/covers.hpp"
#include "ruzsakit/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ruzsakit;

namespace {

const std::vector<IndexSet> kTriangle{{1, 2}, {1, 3}, {2, 3}};

Rational q(long p, long d) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("cover construction") {
    CHECK_THROWS_AS(CoverSpec(2, {IndexSet{}}), IndexError);
    CHECK_THROWS_AS(CoverSpec(2, {IndexSet{3}}), IndexError);
    CHECK_THROWS_AS(CoverSpec(2, {IndexSet{1}}, std::vector<Rational>{1, 1}), SchemaError);
    CHECK_THROWS_AS(CoverSpec(2, {IndexSet{1}}, std::vector<Rational>{-1}), SchemaError);
    CHECK_THROWS_AS(CoverSpec(2, {IndexSet{1}}).coverage(), SchemaError);
    CHECK(CoverSpec(3, kTriangle).multiplicities() == std::vector<std::uint64_t>{2, 2, 2});
}

TEST_CASE("fractional cover check") {
    auto rep = is_fractional_cover(CoverSpec(3, kTriangle, std::vector<Rational>(3, q(1, 2))));
    CHECK(rep.holds());
    CHECK(rep.exact);
    CHECK(rep.details["coverage"] == nlohmann::json{"1", "1", "1"});

    rep = is_fractional_cover(CoverSpec(2, {IndexSet{1}}, std::vector<Rational>{1}));
    CHECK(rep.verdict == Verdict::violated);
    CHECK(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0]["element"] == 2);

    rep = is_fractional_cover(CoverSpec(3, {IndexSet{1, 2}, IndexSet{3}, IndexSet{2, 3}},
                                        std::vector<Rational>(3, Rational(1))));
    CHECK(rep.holds());
}

TEST_CASE("uniform k-cover check") {
    auto rep = is_uniform_k_cover(CoverSpec(3, kTriangle), 2);
    CHECK(rep.holds());
    rep = is_uniform_k_cover(CoverSpec(2, {IndexSet{1}, IndexSet{1, 2}}), 1);
    CHECK_FALSE(rep.holds());
    CHECK(rep.details["k_cover"] == true);
    CHECK(rep.details["uniform"] == false);
    rep = is_uniform_k_cover(CoverSpec(4, {IndexSet{1, 3}, IndexSet{2}, IndexSet{4}}), 1);
    CHECK(rep.holds());
}

TEST_CASE("minimum fractional cover examples") {
    const auto tri = min_fractional_cover(3, kTriangle);
    CHECK(tri.objective == q(3, 2));
    CHECK(tri.weights == std::vector<Rational>(3, q(1, 2)));

    const auto part = min_fractional_cover(5, {IndexSet{1, 4}, IndexSet{2}, IndexSet{3, 5}});
    CHECK(part.objective == 3);
    CHECK(part.weights == std::vector<Rational>(3, Rational(1)));

    CHECK(min_fractional_cover(2, {IndexSet{1, 2}}).objective == 1);
    CHECK_THROWS_AS(min_fractional_cover(3, {IndexSet{1, 2}}), InfeasibleError);
}

TEST_CASE("LP against vertex enumeration and feasible points") {
    gen::Rng rng(2718);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = gen::uniform(rng, 1, 5);
        const std::size_t m = gen::uniform(rng, 1, 6);
        std::vector<IndexSet> members;
        for (std::size_t j = 0; j < m; ++j) members.push_back(gen::nonempty_subset(rng, n));
        for (std::size_t e = 1; e <= n; ++e)
            if (std::none_of(members.begin(), members.end(), [&](const IndexSet& S) { return S.contains(e); }))
                members.push_back(IndexSet{e});

        const auto sol = min_fractional_cover(n, members);
        CHECK(is_fractional_cover(CoverSpec(n, members, sol.weights)).holds());
        const auto best = oracle::min_cover_by_vertices(n, members);
        REQUIRE(best.has_value());
        CHECK(sol.objective == *best);
        for (int t = 0; t < 20; ++t) {
            Rational obj = 0;
            for (const auto& w : gen::feasible_point(rng, n, members)) obj += w;
            CHECK(sol.objective <= obj);
        }
        // member order does not change the optimum
        auto shuffled = members;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(min_fractional_cover(n, shuffled).objective == sol.objective);
    }
}

TEST_CASE("scaled uniform covers have coverage exactly one") {
    const CoverSpec pairs(3, kTriangle, std::vector<Rational>(3, Rational(1)));
    const auto scaled = scaled_uniform(pairs, 2);
    CHECK(scaled.coverage() == std::vector<Rational>(3, Rational(1)));
    CHECK(is_fractional_cover(scaled).holds());

    const CoverSpec all(4, {IndexSet{1, 2, 3}, IndexSet{1, 2, 4}, IndexSet{1, 3, 4}, IndexSet{2, 3, 4}},
                        std::vector<Rational>(4, Rational(1)));
    CHECK(scaled_uniform(all, 3).coverage() == std::vector<Rational>(4, Rational(1)));
}
