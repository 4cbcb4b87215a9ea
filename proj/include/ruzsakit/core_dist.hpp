#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ruzsakit/rational.hpp"

namespace ruzsakit {

// An element of a ground set. Scalars are length-1 tuples; points of a
// product space B_1 x ... x B_n are length-n tuples.
struct GroundElement {
    std::vector<std::int64_t> coords;

    GroundElement() = default;
    GroundElement(std::initializer_list<std::int64_t> c) : coords(c) {}
    explicit GroundElement(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    std::size_t size() const noexcept { return coords.size(); }

    friend auto operator<=>(const GroundElement&, const GroundElement&) = default;
    friend bool operator==(const GroundElement&, const GroundElement&) = default;
};

// A finitely supported probability distribution with exact rational masses.
//
// Invariants: support elements are pairwise distinct, every stored mass is
// strictly positive and reduced, and the masses sum to exactly 1. Outcomes
// given with zero mass are dropped. The support order is the order given at
// construction and is what "support index" refers to elsewhere.
class RationalDist {
public:
    RationalDist(std::vector<GroundElement> support, std::vector<Rational> probs);

    // Uniform distribution over the given distinct elements.
    static RationalDist uniform(std::vector<GroundElement> support);

    const std::vector<GroundElement>& support() const noexcept { return support_; }
    const std::vector<Rational>& probs() const noexcept { return probs_; }
    std::size_t size() const noexcept { return support_.size(); }

    // Mass of x, 0 if x is not in the support.
    Rational prob(const GroundElement& x) const;
    // Position of x in support(), or -1.
    std::ptrdiff_t index_of(const GroundElement& x) const;

    // Equality of laws: same (element, mass) pairs regardless of order.
    friend bool operator==(const RationalDist& a, const RationalDist& b);

private:
    std::vector<GroundElement> support_;
    std::vector<Rational> probs_;
    std::map<GroundElement, std::size_t> index_;
};

// A total function on a finite declared domain.
class FiniteMap {
public:
    FiniteMap() = default;
    // Throws SchemaError if a key appears twice with different images.
    explicit FiniteMap(std::vector<std::pair<GroundElement, GroundElement>> table);

    static FiniteMap identity(std::span<const GroundElement> domain);

    // Throws DomainError if x is not in the domain.
    const GroundElement& operator()(const GroundElement& x) const;
    bool contains(const GroundElement& x) const { return table_.contains(x); }

    // Keys in canonical order.
    std::vector<GroundElement> domain() const;
    const std::map<GroundElement, GroundElement>& table() const noexcept { return table_; }

    // The induced map on k-tuples, applied coordinate-wise.
    std::vector<GroundElement> apply_power(std::span<const GroundElement> xs) const;

private:
    std::map<GroundElement, GroundElement> table_;
};

// Shannon entropy sum p log(1/p) in the requested base.
double entropy(const RationalDist& dist, LogBase base = LogBase::two);

// Law of f(X). Output support follows first appearance of f(x) along the input
// support order. Throws DomainError if f is undefined on some support element.
RationalDist pushforward(const FiniteMap& f, const RationalDist& dist);

// lcm of the reduced denominators; k is suitable iff this divides k.
std::uint64_t minimal_suitable_k(const RationalDist& dist);
bool is_suitable(const RationalDist& dist, std::uint64_t k);

// Best rational approximation of a nonnegative weight vector with common
// denominator at most max_denominator, in total variation distance to the
// normalized weights. Zero-rounded outcomes are dropped from the support.
// `support` defaults to the scalars 0..n-1.
RationalDist rationalize(std::span<const double> weights, std::uint64_t max_denominator,
                         std::vector<GroundElement> support = {});

}  // namespace ruzsakit
