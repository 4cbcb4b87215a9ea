#include "ruzsakit/checkers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ruzsakit/errors.hpp"
#include "ruzsakit/ruzsa.hpp"

namespace ruzsakit {

namespace {

// Beyond this many bits the exact power comparison is skipped.
constexpr double kMaxExactBits = 1 << 24;

// Exact test of  lhs <= prod base_i^alpha_i  for alpha_i >= 0 and positive
// integers, by raising both sides to the common denominator d of the alphas.
std::optional<bool> exact_power_le(const BigInt& lhs,
                                   const std::vector<std::pair<BigInt, Rational>>& rhs) {
    BigInt d = 1;
    for (const auto& [base, alpha] : rhs) d = lcm(d, alpha.get_den());
    if (!d.fits_ulong_p()) return std::nullopt;
    const double dd = d.get_d();
    double bits = dd * log_in(lhs, LogBase::two);
    for (const auto& [base, alpha] : rhs) bits += alpha.get_d() * dd * log_in(base, LogBase::two);
    if (bits > kMaxExactBits) return std::nullopt;

    const BigInt left = pow(lhs, d.get_ui());
    BigInt right = 1;
    for (const auto& [base, alpha] : rhs) {
        const BigInt e = alpha.get_num() * (d / alpha.get_den());
        right *= pow(base, e.get_ui());
    }
    return left <= right;
}

void require_nonnegative(const InequalitySpec& spec) {
    if (spec.has_negative_coefficient())
        throw NegativeCoefficientError(
            "set-side inequalities need nonnegative coefficients");
}

std::size_t image_size(const FiniteMap& f, std::span<const GroundElement> A) {
    std::set<GroundElement> image;
    for (const auto& a : A) image.insert(f(a));
    return image.size();
}

nlohmann::json rationals_json(const std::vector<Rational>& qs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& q : qs) out.push_back(q.get_str());
    return out;
}

void require_dimension(const RationalDist& X, std::size_t n) {
    for (const auto& x : X.support())
        if (x.size() != n)
            throw SchemaError("support element of length " + std::to_string(x.size()) +
                              " for a cover of [" + std::to_string(n) + "]");
}

void require_uniform(const CoverSpec& cover, std::uint64_t k) {
    const auto report = is_uniform_k_cover(cover, k);
    if (!report.holds())
        throw CoverError("members do not form a uniform " + std::to_string(k) + "-cover of [" +
                         std::to_string(cover.n()) + "]");
}

void require_fractional(const CoverSpec& cover) {
    const auto report = is_fractional_cover(cover);
    if (!report.holds())
        throw CoverError("weights do not form a fractional cover (minimal coverage " +
                         *report.rhs_exact + ")");
}

BigInt big(std::size_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace

InequalitySpec::InequalitySpec(FiniteMap lhs_map, std::vector<FiniteMap> rhs_maps,
                               std::vector<Rational> coefficients)
    : lhs_map_(std::move(lhs_map)),
      rhs_maps_(std::move(rhs_maps)),
      coefficients_(std::move(coefficients)) {
    if (rhs_maps_.size() != coefficients_.size())
        throw SchemaError("rhs_maps and coefficients differ in length");
    for (auto& a : coefficients_) a.canonicalize();
    const auto& table = lhs_map_.table();
    for (const auto& g : rhs_maps_) {
        const auto& other = g.table();
        const bool same_domain =
            table.size() == other.size() &&
            std::equal(table.begin(), table.end(), other.begin(),
                       [](const auto& a, const auto& b) { return a.first == b.first; });
        if (!same_domain) throw SchemaError("maps do not share a common domain");
    }
}

bool InequalitySpec::has_negative_coefficient() const {
    return std::any_of(coefficients_.begin(), coefficients_.end(),
                       [](const Rational& a) { return a < 0; });
}

InequalitySpec projection_spec(std::span<const GroundElement> domain, const CoverSpec& cover) {
    std::vector<FiniteMap> maps;
    std::vector<Rational> coefficients;
    for (std::size_t j = 0; j < cover.members().size(); ++j) {
        const Rational alpha = cover.weights() ? (*cover.weights())[j] : Rational(1);
        if (alpha == 0) continue;
        std::vector<std::pair<GroundElement, GroundElement>> table;
        table.reserve(domain.size());
        for (const auto& x : domain) table.emplace_back(x, project(x, cover.members()[j]));
        maps.emplace_back(std::move(table));
        coefficients.push_back(alpha);
    }
    return InequalitySpec(FiniteMap::identity(domain), std::move(maps), std::move(coefficients));
}

CheckReport check_cardinality(const InequalitySpec& spec, std::span<const GroundElement> A,
                              const EvalOptions& opts) {
    require_nonnegative(spec);
    if (A.empty()) throw SchemaError("cardinality check on an empty set");

    const std::size_t lhs_size = image_size(spec.lhs_map(), A);
    std::vector<std::pair<BigInt, Rational>> rhs_terms;
    nlohmann::json rhs_sizes = nlohmann::json::array();
    double rhs = 0.0;
    for (std::size_t i = 0; i < spec.rhs_maps().size(); ++i) {
        const std::size_t s = image_size(spec.rhs_maps()[i], A);
        const Rational& alpha = spec.coefficients()[i];
        rhs += alpha.get_d() * log_in(static_cast<double>(s), opts.base);
        rhs_terms.emplace_back(big(s), alpha);
        rhs_sizes.push_back(s);
    }

    CheckReport r;
    r.lhs = log_in(static_cast<double>(lhs_size), opts.base);
    r.rhs = rhs;
    r.slack = r.rhs - r.lhs;
    if (const auto exact = exact_power_le(big(lhs_size), rhs_terms)) {
        r.exact = true;
        r.verdict = *exact ? Verdict::holds : Verdict::violated;
    } else if (r.slack > opts.tolerance) {
        r.verdict = Verdict::holds;
    } else if (r.slack < -opts.tolerance) {
        r.verdict = Verdict::violated;
    } else {
        r.verdict = Verdict::inconclusive;
    }
    r.details = {{"lhs_size", lhs_size},
                 {"rhs_sizes", rhs_sizes},
                 {"coefficients", rationals_json(spec.coefficients())}};
    return r;
}

CheckReport check_entropy(const InequalitySpec& spec, const RationalDist& X,
                          const EvalOptions& opts) {
    CheckReport r;
    r.lhs = entropy(pushforward(spec.lhs_map(), X), opts.base);
    nlohmann::json rhs_entropies = nlohmann::json::array();
    double rhs = 0.0;
    for (std::size_t i = 0; i < spec.rhs_maps().size(); ++i) {
        const double h = entropy(pushforward(spec.rhs_maps()[i], X), opts.base);
        rhs += spec.coefficients()[i].get_d() * h;
        rhs_entropies.push_back(h);
    }
    r.rhs = rhs;
    r.slack = r.rhs - r.lhs;
    r.verdict = judge(r.slack, opts.tolerance);
    r.details = {{"rhs_entropies", rhs_entropies},
                 {"coefficients", rationals_json(spec.coefficients())},
                 {"negative_coefficients", spec.has_negative_coefficient()}};
    return r;
}

RationalDist lemma2_witness(std::span<const GroundElement> A, const FiniteMap& f) {
    if (A.empty()) throw SchemaError("lemma2 witness needs a nonempty set");
    const std::set<GroundElement> sorted(A.begin(), A.end());
    // Walking A in canonical order, the first element seen in a fiber is its
    // minimum.
    std::map<GroundElement, GroundElement> representative;
    for (const auto& a : sorted) representative.emplace(f(a), a);
    std::vector<GroundElement> reps;
    reps.reserve(representative.size());
    for (const auto& [image, a] : representative) reps.push_back(a);
    std::sort(reps.begin(), reps.end());
    return RationalDist::uniform(std::move(reps));
}

CheckReport empirical_lemma1(const InequalitySpec& spec, const RationalDist& X,
                             std::uint64_t k_max, const EvalOptions& opts,
                             const std::optional<BigInt>& cross_validate_limit) {
    require_nonnegative(spec);

    const RationalDist Y = pushforward(spec.lhs_map(), X);
    std::vector<RationalDist> Ys;
    for (const auto& g : spec.rhs_maps()) Ys.push_back(pushforward(g, X));

    const double h_lhs = entropy(Y, opts.base);
    double h_rhs = 0.0;
    for (std::size_t i = 0; i < Ys.size(); ++i)
        h_rhs += spec.coefficients()[i].get_d() * entropy(Ys[i], opts.base);

    CheckReport r;
    r.lhs = h_lhs;
    r.rhs = h_rhs;
    r.slack = h_rhs - h_lhs;

    const std::uint64_t k0 = minimal_suitable_k(X);
    nlohmann::json rows = nlohmann::json::array();
    bool all_hold = true;
    bool any_violated = false;
    bool all_within = true;
    bool all_exact = true;
    for (std::uint64_t k = k0; k <= k_max; k += k0) {
        const double kd = static_cast<double>(k);
        const double log_k1 = log_in(kd + 1.0, opts.base);

        // By commutation, |f^k(R_k(X))| = |R_k(f(X))|, available in closed form.
        const BigInt lhs_size = ruzsa_size(RuzsaSpec(Y, k));
        const double lhs_log = log_in(lhs_size, opts.base);
        double rhs_log = 0.0;
        double rhs_env = 0.0;
        std::vector<std::pair<BigInt, Rational>> rhs_terms;
        nlohmann::json rhs_sizes = nlohmann::json::array();
        for (std::size_t i = 0; i < Ys.size(); ++i) {
            const BigInt s = ruzsa_size(RuzsaSpec(Ys[i], k));
            const double alpha = spec.coefficients()[i].get_d();
            rhs_log += alpha * log_in(s, opts.base);
            rhs_env += alpha * (static_cast<double>(Ys[i].size()) - 1.0) * log_k1 / kd;
            rhs_terms.emplace_back(s, spec.coefficients()[i]);
            rhs_sizes.push_back(s.get_str());
        }

        Verdict v;
        const double slack = rhs_log - lhs_log;
        const auto exact = exact_power_le(lhs_size, rhs_terms);
        if (exact) {
            v = *exact ? Verdict::holds : Verdict::violated;
        } else {
            all_exact = false;
            v = slack > opts.tolerance    ? Verdict::holds
                : slack < -opts.tolerance ? Verdict::violated
                                          : Verdict::inconclusive;
        }

        const double lhs_rate = lhs_log / kd;
        const double rhs_rate = rhs_log / kd;
        const double lhs_gap = h_lhs - lhs_rate;
        const double rhs_gap = h_rhs - rhs_rate;
        const double lhs_env = (static_cast<double>(Y.size()) - 1.0) * log_k1 / kd;
        const bool within = lhs_gap >= -opts.tolerance && lhs_gap <= lhs_env + opts.tolerance &&
                            rhs_gap >= -opts.tolerance && rhs_gap <= rhs_env + opts.tolerance;

        nlohmann::json row = {{"k", k},
                              {"verdict", to_string(v)},
                              {"exact", exact.has_value()},
                              {"lhs_size", lhs_size.get_str()},
                              {"rhs_sizes", rhs_sizes},
                              {"lhs_rate", lhs_rate},
                              {"rhs_rate", rhs_rate},
                              {"lhs_gap", lhs_gap},
                              {"rhs_gap", rhs_gap},
                              {"lhs_envelope", lhs_env},
                              {"rhs_envelope", rhs_env},
                              {"within_envelope", within}};

        if (cross_validate_limit) {
            const RuzsaSpec domain_spec(X, k);
            bool agrees = verify_commutation(spec.lhs_map(), domain_spec, *cross_validate_limit)
                              .details["image_size"] == lhs_size.get_str();
            for (std::size_t i = 0; i < Ys.size(); ++i) {
                agrees = agrees &&
                         verify_commutation(spec.rhs_maps()[i], domain_spec, *cross_validate_limit)
                                 .details["image_size"] == rhs_sizes[i];
            }
            row["enumeration_agrees"] = agrees;
            if (!agrees) v = Verdict::violated;
        }

        all_hold = all_hold && v == Verdict::holds;
        any_violated = any_violated || v == Verdict::violated;
        all_within = all_within && within;
        rows.push_back(std::move(row));
    }

    if (rows.empty()) {
        r.verdict = Verdict::inconclusive;
    } else if (any_violated || !all_within) {
        r.verdict = Verdict::violated;
    } else {
        r.verdict = all_hold ? Verdict::holds : Verdict::inconclusive;
    }
    r.exact = !rows.empty() && all_exact;
    r.details = {{"minimal_k", k0},
                 {"k_max", k_max},
                 {"rows", rows},
                 {"within_envelope", all_within}};
    return r;
}

CheckReport check_shearer(const PointSet& A, const CoverSpec& cover, std::uint64_t k,
                          const EvalOptions& opts) {
    if (A.dimension() != cover.n())
        throw SchemaError("point set dimension differs from the cover's n");
    require_uniform(cover, k);

    const BigInt lhs_exact = pow(big(A.size()), k);
    BigInt rhs_exact = 1;
    double rhs = 0.0;
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& S : cover.members()) {
        const std::size_t s = project_set(A, S).size();
        rhs_exact *= big(s);
        rhs += log_in(static_cast<double>(s), opts.base);
        sizes.push_back(s);
    }

    CheckReport r;
    r.exact = true;
    r.verdict = lhs_exact <= rhs_exact ? Verdict::holds : Verdict::violated;
    r.lhs = static_cast<double>(k) * log_in(static_cast<double>(A.size()), opts.base);
    r.rhs = rhs;
    r.slack = r.rhs - r.lhs;
    r.lhs_exact = lhs_exact.get_str();
    r.rhs_exact = rhs_exact.get_str();
    r.details = {{"side", "sets"}, {"k", k}, {"size", A.size()}, {"projection_sizes", sizes}};
    return r;
}

CheckReport check_shearer(const RationalDist& X, const CoverSpec& cover, std::uint64_t k,
                          const EvalOptions& opts) {
    require_dimension(X, cover.n());
    require_uniform(cover, k);

    CheckReport r;
    r.lhs = static_cast<double>(k) * entropy(X, opts.base);
    nlohmann::json terms = nlohmann::json::array();
    double rhs = 0.0;
    for (const auto& S : cover.members()) {
        const double h = entropy(project_rv(X, S), opts.base);
        rhs += h;
        terms.push_back(h);
    }
    r.rhs = rhs;
    r.slack = r.rhs - r.lhs;
    r.verdict = judge(r.slack, opts.tolerance);
    r.details = {{"side", "entropy"}, {"k", k}, {"marginal_entropies", terms}};
    return r;
}

CheckReport check_projection_theorem(const PointSet& A, const CoverSpec& cover,
                                     const EvalOptions& opts) {
    if (A.dimension() != cover.n())
        throw SchemaError("point set dimension differs from the cover's n");
    require_fractional(cover);

    CheckReport r;
    r.lhs = log_in(static_cast<double>(A.size()), opts.base);
    nlohmann::json factors = nlohmann::json::array();
    double rhs = 0.0;
    for (std::size_t j = 0; j < cover.members().size(); ++j) {
        const Rational& alpha = (*cover.weights())[j];
        if (alpha == 0) continue;
        const IndexSet& S = cover.members()[j];
        const double log_size = log_conditional_avg_size(A, S, s_star(S), opts.base);
        rhs += alpha.get_d() * log_size;
        factors.push_back({{"member", S.indices()},
                           {"weight", alpha.get_str()},
                           {"log_conditional_size", log_size}});
    }
    r.rhs = rhs;
    r.slack = r.rhs - r.lhs;
    r.verdict = judge(r.slack, opts.tolerance);
    r.details = {{"side", "sets"}, {"size", A.size()}, {"factors", factors}};
    return r;
}

CheckReport check_projection_theorem(const RationalDist& X, const CoverSpec& cover,
                                     const EvalOptions& opts) {
    require_dimension(X, cover.n());
    require_fractional(cover);

    CheckReport r;
    r.lhs = entropy(X, opts.base);
    nlohmann::json terms = nlohmann::json::array();
    double rhs = 0.0;
    for (std::size_t j = 0; j < cover.members().size(); ++j) {
        const Rational& alpha = (*cover.weights())[j];
        if (alpha == 0) continue;
        const IndexSet& S = cover.members()[j];
        const double h = conditional_entropy(X, S, s_star(S), opts.base);
        rhs += alpha.get_d() * h;
        terms.push_back({{"member", S.indices()},
                         {"weight", alpha.get_str()},
                         {"conditional_entropy", h}});
    }
    r.rhs = rhs;
    r.slack = r.rhs - r.lhs;
    r.verdict = judge(r.slack, opts.tolerance);
    r.details = {{"side", "entropy"}, {"terms", terms}};
    return r;
}

}  // namespace ruzsakit
