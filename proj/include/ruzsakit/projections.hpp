#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ruzsakit/core_dist.hpp"
#include "ruzsakit/report.hpp"

namespace ruzsakit {

// A sorted set of 1-based coordinate indices. The type itself admits the
// empty set (the result of s_star when min S = 1); operations that need a
// nonempty set say so.
class IndexSet {
public:
    IndexSet() = default;
    // Sorts; throws IndexError on duplicates or indices < 1.
    explicit IndexSet(std::vector<std::size_t> indices);
    IndexSet(std::initializer_list<std::size_t> indices)
        : IndexSet(std::vector<std::size_t>(indices)) {}

    // {1, ..., n}
    static IndexSet range(std::size_t n);

    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    bool empty() const noexcept { return indices_.empty(); }
    std::size_t size() const noexcept { return indices_.size(); }
    std::size_t min() const { return indices_.front(); }
    std::size_t max() const { return indices_.back(); }
    bool contains(std::size_t i) const;

    // Throws IndexError if some index exceeds n.
    void check_within(std::size_t n) const;

    friend IndexSet set_union(const IndexSet& a, const IndexSet& b);
    friend IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<std::size_t> indices_;
};

// The coordinates of x indexed by S (x has length >= max S).
GroundElement project(const GroundElement& x, const IndexSet& S);

// A nonempty finite subset of a product space of dimension n, kept sorted.
class PointSet {
public:
    // Throws SchemaError on empty input, wrong point length or duplicates.
    PointSet(std::size_t dimension, std::vector<GroundElement> points);

    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<GroundElement>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool contains(const GroundElement& x) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t dimension_;
    std::vector<GroundElement> points_;
};

// A_S. Throws IndexError if S is empty or exceeds the dimension.
PointSet project_set(const PointSet& A, const IndexSet& S);

// X_S, the pushforward of X under the coordinate projection.
RationalDist project_rv(const RationalDist& X, const IndexSet& S);

// S_* = {1, ..., min S - 1}; empty when min S = 1. Throws IndexError on empty S.
IndexSet s_star(const IndexSet& S);

// Points of A whose S-coordinates equal y. Throws EmptySliceError if none.
PointSet conditional_slice(const PointSet& A, const IndexSet& S, const GroundElement& y);

// Average conditioned size
//   |A_T | A_S| = prod_{y in A_S} |{x_T : x in A, x_S = y}|^{p(y)},
// with p(y) = |{x in A : x_S = y}| / |A|. An empty S gives |A_T|.
// The log variant is what the checkers use.
double conditional_avg_size(const PointSet& A, const IndexSet& T, const IndexSet& S);
double log_conditional_avg_size(const PointSet& A, const IndexSet& T, const IndexSet& S,
                                LogBase base = LogBase::two);

// H(X_S | X_C) = H(X_{S u C}) - H(X_C); plain H(X_S) when C is empty.
double conditional_entropy(const RationalDist& X, const IndexSet& S, const IndexSet& C,
                           LogBase base = LogBase::two);

}  // namespace ruzsakit
