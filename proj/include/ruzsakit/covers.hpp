#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ruzsakit/projections.hpp"
#include "ruzsakit/rational.hpp"
#include "ruzsakit/report.hpp"

namespace ruzsakit {

// A multiset of nonempty subsets of [n], optionally weighted. Duplicate
// members are kept as given.
class CoverSpec {
public:
    // Throws IndexError for empty or out-of-range members, SchemaError for a
    // weight vector of the wrong length or with negative entries.
    CoverSpec(std::size_t n, std::vector<IndexSet> members,
              std::optional<std::vector<Rational>> weights = std::nullopt);

    std::size_t n() const noexcept { return n_; }
    const std::vector<IndexSet>& members() const noexcept { return members_; }
    const std::optional<std::vector<Rational>>& weights() const noexcept { return weights_; }

    // Number of members containing each i, indexed 0..n-1.
    std::vector<std::uint64_t> multiplicities() const;
    // Sum of weights of members containing each i; SchemaError if unweighted.
    std::vector<Rational> coverage() const;

private:
    std::size_t n_;
    std::vector<IndexSet> members_;
    std::optional<std::vector<Rational>> weights_;
};

struct LPSolution {
    std::vector<Rational> weights;   // parallel to the members
    Rational objective;              // sum of weights
    std::vector<Rational> coverage;  // per element of [n], each >= 1
};

// Exact check that every i is covered with total weight >= 1. lhs is 1, rhs
// the minimal coverage; details.coverage lists every sum.
// Throws SchemaError if the cover carries no weights.
CheckReport is_fractional_cover(const CoverSpec& cover);

// Multiplicity check: details.uniform iff every count equals k, details.k_cover
// iff every count is >= k. The verdict holds iff uniform.
CheckReport is_uniform_k_cover(const CoverSpec& cover, std::uint64_t k);

// Minimum total weight fractional cover, solved exactly.
//
// The LP  min 1'a  s.t.  M a >= 1, a >= 0  is solved through its dual
// max 1'y  s.t.  M'y <= 1, y >= 0, whose all-slack basis is feasible. Primal
// simplex with Bland's rule runs on the dual; the cover weights are read off
// the slack reduced costs of the final tableau. Only the objective is unique
// in degenerate instances.
// Throws InfeasibleError if some element of [n] is in no member.
LPSolution min_fractional_cover(std::size_t n, const std::vector<IndexSet>& members);

// The cover with every weight replaced by w / k (exact).
CoverSpec scaled_uniform(const CoverSpec& cover, std::uint64_t k);

}  // namespace ruzsakit
