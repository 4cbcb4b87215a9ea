#include "ruzsakit/projections.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <set>

#include "ruzsakit/errors.hpp"

namespace ruzsakit {

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (!indices_.empty() && indices_.front() < 1)
        throw IndexError("coordinate indices are 1-based");
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
        throw IndexError("duplicate coordinate index");
}

IndexSet IndexSet::range(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
    return IndexSet(std::move(v));
}

bool IndexSet::contains(std::size_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

void IndexSet::check_within(std::size_t n) const {
    if (!indices_.empty() && indices_.back() > n)
        throw IndexError("coordinate index " + std::to_string(indices_.back()) +
                         " exceeds dimension " + std::to_string(n));
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    std::vector<std::size_t> out;
    std::set_union(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end(),
                   std::back_inserter(out));
    return IndexSet(std::move(out));
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.indices_.begin(), a.indices_.end(), b.indices_.begin(),
                          b.indices_.end(), std::back_inserter(out));
    return IndexSet(std::move(out));
}

GroundElement project(const GroundElement& x, const IndexSet& S) {
    S.check_within(x.size());
    std::vector<std::int64_t> c;
    c.reserve(S.size());
    for (auto i : S.indices()) c.push_back(x.coords[i - 1]);
    return GroundElement(std::move(c));
}

PointSet::PointSet(std::size_t dimension, std::vector<GroundElement> points)
    : dimension_(dimension), points_(std::move(points)) {
    if (dimension_ == 0) throw SchemaError("point set dimension must be >= 1");
    if (points_.empty()) throw SchemaError("point set is empty");
    for (const auto& p : points_)
        if (p.size() != dimension_)
            throw SchemaError("point of length " + std::to_string(p.size()) +
                              " in a set of dimension " + std::to_string(dimension_));
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
        throw SchemaError("duplicate point");
}

bool PointSet::contains(const GroundElement& x) const {
    return std::binary_search(points_.begin(), points_.end(), x);
}

namespace {

void require_nonempty_within(const IndexSet& S, std::size_t n) {
    if (S.empty()) throw IndexError("empty index set");
    S.check_within(n);
}

}  // namespace

PointSet project_set(const PointSet& A, const IndexSet& S) {
    require_nonempty_within(S, A.dimension());
    std::set<GroundElement> image;
    for (const auto& x : A.points()) image.insert(project(x, S));
    return PointSet(S.size(), {image.begin(), image.end()});
}

RationalDist project_rv(const RationalDist& X, const IndexSet& S) {
    if (S.empty()) throw IndexError("empty index set");
    std::vector<std::pair<GroundElement, GroundElement>> table;
    table.reserve(X.size());
    for (const auto& x : X.support()) table.emplace_back(x, project(x, S));
    return pushforward(FiniteMap(std::move(table)), X);
}

IndexSet s_star(const IndexSet& S) {
    if (S.empty()) throw IndexError("S_* needs a nonempty S");
    return IndexSet::range(S.min() - 1);
}

PointSet conditional_slice(const PointSet& A, const IndexSet& S, const GroundElement& y) {
    require_nonempty_within(S, A.dimension());
    std::vector<GroundElement> slice;
    for (const auto& x : A.points())
        if (project(x, S) == y) slice.push_back(x);
    if (slice.empty()) throw EmptySliceError("no point of A has those S-coordinates");
    return PointSet(A.dimension(), std::move(slice));
}

double log_conditional_avg_size(const PointSet& A, const IndexSet& T, const IndexSet& S,
                                LogBase base) {
    require_nonempty_within(T, A.dimension());
    S.check_within(A.dimension());
    if (S.empty()) return log_in(static_cast<double>(project_set(A, T).size()), base);

    // For each y in A_S: how many points of A lie over y, and the distinct
    // T-projections among them.
    std::map<GroundElement, std::pair<std::uint64_t, std::set<GroundElement>>> fibers;
    for (const auto& x : A.points()) {
        auto& [count, images] = fibers[project(x, S)];
        ++count;
        images.insert(project(x, T));
    }
    // p(y) = count / |A| exactly; only the log of the slice size is a float.
    const Rational total(static_cast<unsigned long>(A.size()));
    double acc = 0.0;
    for (const auto& [y, fiber] : fibers) {
        Rational p(static_cast<unsigned long>(fiber.first));
        p /= total;
        acc += p.get_d() * log_in(static_cast<double>(fiber.second.size()), base);
    }
    return acc;
}

double conditional_avg_size(const PointSet& A, const IndexSet& T, const IndexSet& S) {
    return std::exp2(log_conditional_avg_size(A, T, S, LogBase::two));
}

double conditional_entropy(const RationalDist& X, const IndexSet& S, const IndexSet& C,
                           LogBase base) {
    if (S.empty()) throw IndexError("conditional entropy needs a nonempty S");
    const double joint = entropy(project_rv(X, set_union(S, C)), base);
    if (C.empty()) return joint;
    return joint - entropy(project_rv(X, C), base);
}

}  // namespace ruzsakit
