#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ruzsakit/core_dist.hpp"
#include "ruzsakit/covers.hpp"
#include "ruzsakit/projections.hpp"
#include "ruzsakit/rational.hpp"
#include "ruzsakit/report.hpp"

namespace ruzsakit {

// The data of an inequality  f <= sum alpha_i f_i,  read either as
//   |f(A)| <= prod |f_i(A)|^alpha_i            (sets)
//   H(f(X)) <= sum alpha_i H(f_i(X))           (entropy).
class InequalitySpec {
public:
    // Throws SchemaError if the map and coefficient lists differ in length or
    // the maps do not share one domain.
    InequalitySpec(FiniteMap lhs_map, std::vector<FiniteMap> rhs_maps,
                   std::vector<Rational> coefficients);

    const FiniteMap& lhs_map() const noexcept { return lhs_map_; }
    const std::vector<FiniteMap>& rhs_maps() const noexcept { return rhs_maps_; }
    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

    bool has_negative_coefficient() const;

private:
    FiniteMap lhs_map_;
    std::vector<FiniteMap> rhs_maps_;
    std::vector<Rational> coefficients_;
};

// Identity on the left, one coordinate projection per cover member on the
// right, weights as coefficients. Members with weight 0 are dropped.
InequalitySpec projection_spec(std::span<const GroundElement> domain, const CoverSpec& cover);

// log|f(A)| vs sum alpha_i log|f_i(A)|. The verdict comes from an exact
// big-integer comparison |f(A)|^d <= prod |f_i(A)|^(alpha_i d) whenever the
// numbers stay moderate; otherwise from the float slack, with |slack| <= tol
// reported as inconclusive.
// Throws NegativeCoefficientError, DomainError.
CheckReport check_cardinality(const InequalitySpec& spec, std::span<const GroundElement> A,
                              const EvalOptions& opts = {});

// H(f(X)) vs sum alpha_i H(f_i(X)). Negative coefficients are evaluated as
// given. Throws DomainError.
CheckReport check_entropy(const InequalitySpec& spec, const RationalDist& X,
                          const EvalOptions& opts = {});

// Uniform distribution over one representative per fiber of f over f(A), the
// representative being the minimum element of the fiber. H(f(W)) = log|f(A)|.
RationalDist lemma2_witness(std::span<const GroundElement> A, const FiniteMap& f);

// Finite-k run of the cardinality hypothesis on Ruzsa sets: for every suitable
// k <= k_max compares |R_k(f(X))| against prod |R_k(f_i(X))|^alpha_i using the
// closed-form multinomials (by commutation these are |f^k(R_k(X))| and
// |f_i^k(R_k(X))|), and tracks (1/k) log of both sides against the entropy
// sides. With cross_validate_limit set, each count is also recomputed by
// enumerating f^k(R_k(X)) (SizeGuardError beyond the limit).
// Throws NegativeCoefficientError.
CheckReport empirical_lemma1(const InequalitySpec& spec, const RationalDist& X,
                             std::uint64_t k_max, const EvalOptions& opts = {},
                             const std::optional<BigInt>& cross_validate_limit = std::nullopt);

// Uniform k-cover inequalities. Sets: |A|^k <= prod_S |A_S| (exact). Entropy:
// k H(X) <= sum_S H(X_S). Throws CoverError unless cover is a uniform k-cover.
CheckReport check_shearer(const PointSet& A, const CoverSpec& cover, std::uint64_t k,
                          const EvalOptions& opts = {});
CheckReport check_shearer(const RationalDist& X, const CoverSpec& cover, std::uint64_t k,
                          const EvalOptions& opts = {});

// Fractional cover inequalities with prefix conditioning:
//   sets:    |A| <= prod_S |A_S | A_{S_*}|^alpha_S
//   entropy: H(X) <= sum_S alpha_S H(X_S | X_{S_*})
// Throws CoverError unless the weights form a fractional cover.
CheckReport check_projection_theorem(const PointSet& A, const CoverSpec& cover,
                                     const EvalOptions& opts = {});
CheckReport check_projection_theorem(const RationalDist& X, const CoverSpec& cover,
                                     const EvalOptions& opts = {});

}  // namespace ruzsakit
