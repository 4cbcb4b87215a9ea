#pragma once

// Seeded random instances for property tests: distributions with small common
// denominators, point sets inside {0,...,r-1}^n, maps and fractional covers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ruzsakit/core_dist.hpp"
#include "ruzsakit/covers.hpp"
#include "ruzsakit/projections.hpp"

namespace ruzsakit::gen {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// All points of {0,...,r-1}^n in lexicographic order.
inline std::vector<GroundElement> cube(std::size_t n, std::int64_t r) {
    std::vector<GroundElement> out;
    std::vector<std::int64_t> c(n, 0);
    while (true) {
        out.emplace_back(c);
        std::size_t pos = n;
        while (pos > 0 && ++c[pos - 1] == r) c[--pos] = 0;
        if (pos == 0) break;
    }
    return out;
}

inline std::vector<GroundElement> scalars(std::size_t count) {
    std::vector<GroundElement> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back({static_cast<std::int64_t>(i)});
    return out;
}

// Distribution on distinct elements of `pool` whose masses share a random
// common denominator d <= max_den; support size <= max_support.
inline RationalDist dist(Rng& rng, std::vector<GroundElement> pool, std::size_t max_support,
                         std::uint64_t max_den) {
    const std::uint64_t d = uniform(rng, 1, max_den);
    const std::size_t cap = std::min<std::size_t>({max_support, d, pool.size()});
    const std::size_t s = uniform(rng, 1, cap);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(s);
    // Composition of d into s positive parts via s-1 distinct cut points.
    std::vector<std::uint64_t> cuts;
    std::set<std::uint64_t> chosen;
    while (chosen.size() + 1 < s) chosen.insert(uniform(rng, 1, d - 1));
    cuts.assign(chosen.begin(), chosen.end());
    cuts.push_back(d);
    std::vector<Rational> probs;
    std::uint64_t prev = 0;
    for (auto c : cuts) {
        Rational p(static_cast<unsigned long>(c - prev), static_cast<unsigned long>(d));
        p.canonicalize();
        probs.push_back(p);
        prev = c;
    }
    return RationalDist(std::move(pool), std::move(probs));
}

inline FiniteMap map_on(Rng& rng, const std::vector<GroundElement>& domain, std::int64_t range) {
    std::vector<std::pair<GroundElement, GroundElement>> table;
    for (const auto& x : domain)
        table.emplace_back(x, GroundElement{static_cast<std::int64_t>(uniform(rng, 0, range - 1))});
    return FiniteMap(std::move(table));
}

inline PointSet point_set(Rng& rng, std::size_t n, std::int64_t r, std::size_t max_size) {
    auto pool = cube(n, r);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t s = uniform(rng, 1, std::min(max_size, pool.size()));
    pool.resize(s);
    return PointSet(n, std::move(pool));
}

inline IndexSet nonempty_subset(Rng& rng, std::size_t n) {
    std::vector<std::size_t> idx;
    while (idx.empty())
        for (std::size_t i = 1; i <= n; ++i)
            if (rng() & 1) idx.push_back(i);
    return IndexSet(std::move(idx));
}

// Random members with weights a/den, then raised member by member until every
// element is covered with weight >= 1. Denominators stay <= den.
inline CoverSpec fractional_cover(Rng& rng, std::size_t n, std::size_t max_members,
                                  std::uint64_t den = 12) {
    std::vector<IndexSet> members;
    const std::size_t m = uniform(rng, 1, max_members);
    for (std::size_t j = 0; j < m; ++j) members.push_back(nonempty_subset(rng, n));
    for (std::size_t i = 1; i <= n; ++i) {
        const bool covered = std::any_of(members.begin(), members.end(),
                                         [&](const IndexSet& S) { return S.contains(i); });
        if (!covered) members.push_back(IndexSet{i});
    }
    std::vector<std::uint64_t> num(members.size());
    for (auto& a : num) a = uniform(rng, 0, den);
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<std::size_t> holders;
        for (std::size_t j = 0; j < members.size(); ++j)
            if (members[j].contains(i)) holders.push_back(j);
        auto cov = [&] {
            std::uint64_t s = 0;
            for (auto j : holders) s += num[j];
            return s;
        };
        while (cov() < den) ++num[holders[uniform(rng, 0, holders.size() - 1)]];
    }
    std::vector<Rational> weights;
    for (auto a : num) {
        Rational w(static_cast<unsigned long>(a), static_cast<unsigned long>(den));
        w.canonicalize();
        weights.push_back(w);
    }
    return CoverSpec(n, std::move(members), std::move(weights));
}

// Nonnegative weights with coverage >= 1, built by scaling random weights by
// the inverse of their minimal coverage. Requires every element covered.
inline std::vector<Rational> feasible_point(Rng& rng, std::size_t n,
                                            const std::vector<IndexSet>& members) {
    std::vector<Rational> w(members.size());
    while (true) {
        for (auto& x : w) {
            x = Rational(static_cast<unsigned long>(uniform(rng, 0, 20)),
                         static_cast<unsigned long>(uniform(rng, 1, 20)));
            x.canonicalize();
        }
        Rational min_cov = -1;
        for (std::size_t i = 1; i <= n; ++i) {
            Rational c = 0;
            for (std::size_t j = 0; j < members.size(); ++j)
                if (members[j].contains(i)) c += w[j];
            if (min_cov < 0 || c < min_cov) min_cov = c;
        }
        if (min_cov <= 0) continue;
        for (auto& x : w) x /= min_cov;
        return w;
    }
}

}  // namespace ruzsakit::gen
