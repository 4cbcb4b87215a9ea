#include "ruzsakit/core_dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "ruzsakit/errors.hpp"

namespace ruzsakit {

RationalDist::RationalDist(std::vector<GroundElement> support, std::vector<Rational> probs) {
    if (support.size() != probs.size())
        throw SchemaError("support and probs differ in length");
    Rational total = 0;
    std::set<GroundElement> seen;
    for (std::size_t i = 0; i < support.size(); ++i) {
        Rational p = probs[i];
        p.canonicalize();
        if (p < 0) throw SchemaError("negative probability " + p.get_str());
        if (support[i].size() == 0) throw SchemaError("empty ground element");
        if (!seen.insert(support[i]).second) throw SchemaError("duplicate support element");
        total += p;
        if (p == 0) continue;
        index_.emplace(support[i], support_.size());
        support_.push_back(std::move(support[i]));
        probs_.push_back(std::move(p));
    }
    if (total != 1) throw SchemaError("probabilities sum to " + total.get_str() + ", not 1");
}

RationalDist RationalDist::uniform(std::vector<GroundElement> support) {
    if (support.empty()) throw SchemaError("uniform distribution over an empty set");
    Rational p(1, static_cast<unsigned long>(support.size()));
    p.canonicalize();
    std::vector<Rational> probs(support.size(), p);
    return RationalDist(std::move(support), std::move(probs));
}

Rational RationalDist::prob(const GroundElement& x) const {
    const auto it = index_.find(x);
    return it == index_.end() ? Rational(0) : probs_[it->second];
}

std::ptrdiff_t RationalDist::index_of(const GroundElement& x) const {
    const auto it = index_.find(x);
    return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

bool operator==(const RationalDist& a, const RationalDist& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b.prob(a.support_[i]) != a.probs_[i]) return false;
    return true;
}

FiniteMap::FiniteMap(std::vector<std::pair<GroundElement, GroundElement>> table) {
    for (auto& [key, value] : table) {
        const auto [it, inserted] = table_.emplace(std::move(key), value);
        if (!inserted && it->second != value)
            throw SchemaError("map assigns two images to one element");
    }
}

FiniteMap FiniteMap::identity(std::span<const GroundElement> domain) {
    FiniteMap f;
    for (const auto& x : domain) f.table_.emplace(x, x);
    return f;
}

const GroundElement& FiniteMap::operator()(const GroundElement& x) const {
    const auto it = table_.find(x);
    if (it == table_.end()) throw DomainError("element outside the domain of the map");
    return it->second;
}

std::vector<GroundElement> FiniteMap::domain() const {
    std::vector<GroundElement> keys;
    keys.reserve(table_.size());
    for (const auto& [key, value] : table_) keys.push_back(key);
    return keys;
}

std::vector<GroundElement> FiniteMap::apply_power(std::span<const GroundElement> xs) const {
    std::vector<GroundElement> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back((*this)(x));
    return out;
}

double entropy(const RationalDist& dist, LogBase base) {
    double h = 0.0;
    for (const auto& p : dist.probs()) {
        // log(1/p) = log r - log q keeps precision for tiny masses.
        const double l = log_in(BigInt(p.get_den()), base) - log_in(BigInt(p.get_num()), base);
        h += p.get_d() * l;
    }
    return h;
}

RationalDist pushforward(const FiniteMap& f, const RationalDist& dist) {
    std::vector<GroundElement> support;
    std::vector<Rational> probs;
    std::map<GroundElement, std::size_t> slot;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const GroundElement& y = f(dist.support()[i]);
        const auto [it, inserted] = slot.emplace(y, support.size());
        if (inserted) {
            support.push_back(y);
            probs.push_back(dist.probs()[i]);
        } else {
            probs[it->second] += dist.probs()[i];
        }
    }
    return RationalDist(std::move(support), std::move(probs));
}

std::uint64_t minimal_suitable_k(const RationalDist& dist) {
    BigInt k = 1;
    for (const auto& p : dist.probs()) k = lcm(k, p.get_den());
    return to_u64(k);
}

bool is_suitable(const RationalDist& dist, std::uint64_t k) {
    return k > 0 && k % minimal_suitable_k(dist) == 0;
}

RationalDist rationalize(std::span<const double> weights, std::uint64_t max_denominator,
                         std::vector<GroundElement> support) {
    const std::size_t n = weights.size();
    if (n == 0) throw ApproximationError("no weights");
    if (max_denominator == 0) throw ApproximationError("max_denominator must be positive");
    if (support.empty()) {
        for (std::size_t i = 0; i < n; ++i) support.push_back({static_cast<std::int64_t>(i)});
    }
    if (support.size() != n) throw SchemaError("support and weights differ in length");
    double sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0) throw ApproximationError("weights must be finite and >= 0");
        sum += w;
    }
    if (!(sum > 0)) throw ApproximationError("all weights are zero");

    std::vector<double> target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = weights[i] / sum;

    // For a fixed common denominator d, largest-remainder rounding minimizes
    // sum |c_i/d - w_i| subject to sum c_i = d.
    std::vector<std::uint64_t> best_counts;
    std::uint64_t best_d = 0;
    double best_tv = std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> counts(n);
    std::vector<std::size_t> order(n);
    std::vector<double> frac(n);
    for (std::uint64_t d = 1; d <= max_denominator; ++d) {
        std::uint64_t used = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double t = target[i] * static_cast<double>(d);
            const double fl = std::floor(t);
            counts[i] = static_cast<std::uint64_t>(fl);
            frac[i] = t - fl;
            used += counts[i];
        }
        if (used > d) continue;  // only reachable through float noise
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
        for (std::uint64_t r = 0; r < d - used; ++r) ++counts[order[r % n]];
        double tv = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            tv += std::abs(static_cast<double>(counts[i]) / static_cast<double>(d) - target[i]);
        tv /= 2;
        if (tv < best_tv - 1e-15) {
            best_tv = tv;
            best_d = d;
            best_counts = counts;
        }
    }

    std::vector<Rational> probs;
    probs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        probs.emplace_back(Rational(static_cast<unsigned long>(best_counts[i]),
                                    static_cast<unsigned long>(best_d)));
    for (auto& p : probs) p.canonicalize();
    return RationalDist(std::move(support), std::move(probs));
}

}  // namespace ruzsakit
