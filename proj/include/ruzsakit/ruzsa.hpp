#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ruzsakit/core_dist.hpp"
#include "ruzsakit/rational.hpp"
#include "ruzsakit/report.hpp"

namespace ruzsakit {

// Vectors of length k over the support of a distribution.
using RuzsaVector = std::vector<GroundElement>;

inline const BigInt kDefaultEnumLimit{1000000};

// A distribution together with a suitable length k. The k-Ruzsa set R_k(X)
// consists of the length-k vectors in which the i-th support element occurs
// exactly counts()[i] = k * p_i times.
class RuzsaSpec {
public:
    // Throws SuitabilityError unless minimal_suitable_k(dist) divides k.
    RuzsaSpec(RationalDist dist, std::uint64_t k);

    const RationalDist& dist() const noexcept { return dist_; }
    std::uint64_t k() const noexcept { return k_; }
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

private:
    RationalDist dist_;
    std::uint64_t k_;
    std::vector<std::uint64_t> counts_;
};

// Multinomial coefficient (sum c)! / prod c!.
BigInt multinomial(std::span<const std::uint64_t> counts);

// |R_k(X)| in closed form; never enumerates.
BigInt ruzsa_size(const RuzsaSpec& spec);

// Exact membership test: length k and every occurrence count matches.
bool is_member(const RuzsaSpec& spec, std::span<const GroundElement> v);

// Streams R_k(X) in lexicographic order of support indices, each vector once.
//
//   RuzsaEnumerator e(spec, limit);
//   while (auto v = e.next()) { ... }
//
// Throws SizeGuardError at construction if |R_k(X)| exceeds the limit.
class RuzsaEnumerator {
public:
    RuzsaEnumerator(const RuzsaSpec& spec, const BigInt& limit = kDefaultEnumLimit);

    std::optional<RuzsaVector> next();
    // Same stream as support indices; nullptr once exhausted.
    const std::vector<std::uint32_t>* next_indices();

    const BigInt& size() const noexcept { return size_; }

private:
    RuzsaSpec spec_;
    BigInt size_;
    std::vector<std::uint32_t> current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<RuzsaVector> ruzsa_enumerate(const RuzsaSpec& spec,
                                         const BigInt& limit = kDefaultEnumLimit);

// Enumerates f^k(R_k(X)) and R_k(f(X)) independently and compares them as sets.
// lhs is |f^k(R_k(X))|, rhs is |R_k(f(X))|; witnesses list up to a handful of
// vectors found on only one side.
CheckReport verify_commutation(const FiniteMap& f, const RuzsaSpec& spec,
                               const BigInt& limit = kDefaultEnumLimit);

// Constructive lift of y in R_k(f(X)) to some x in R_k(X) with f^k(x) = y.
// Inside the positions holding each image value (in increasing order), the
// preimages are written in blocks of k * Pr(X = x), in support order.
// Throws MembershipError if y is not in R_k(f(X)).
RuzsaVector preimage_lift(const FiniteMap& f, const RuzsaSpec& spec,
                          std::span<const GroundElement> y);

// Exact finite-k certificate for log|R_k| = k H(X) + O(log k):
//   |R_k| <= T <= (k+1)^(n-1) |R_k|,   T = prod p_i^(-k p_i) = 2^(k H(X)).
// lhs holds |R_k|, rhs holds T; details carry both ratios.
CheckReport type_bound_check(const RuzsaSpec& spec, const EvalOptions& opts = {});

struct ConvergenceRow {
    std::uint64_t k = 0;
    double rate = 0.0;      // log|R_k| / k
    double entropy = 0.0;   // H(X)
    double gap = 0.0;       // entropy - rate
    double envelope = 0.0;  // (n-1) log(k+1) / k
    bool within = false;    // -tol <= gap <= envelope + tol
};

std::vector<ConvergenceRow> convergence_profile(const RationalDist& dist,
                                                std::span<const std::uint64_t> ks,
                                                const EvalOptions& opts = {});

nlohmann::json to_json(const ConvergenceRow& row);

}  // namespace ruzsakit
