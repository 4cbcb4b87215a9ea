#include "ruzsakit/ruzsa.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

#include "ruzsakit/errors.hpp"

namespace ruzsakit {

namespace {

using IndexVector = std::vector<std::uint32_t>;

constexpr std::size_t kMaxWitnesses = 5;

nlohmann::json element_json(const GroundElement& x) { return x.coords; }

nlohmann::json vector_json(const IndexVector& idx, const RationalDist& dist) {
    nlohmann::json out = nlohmann::json::array();
    for (auto i : idx) out.push_back(element_json(dist.support()[i]));
    return out;
}

}  // namespace

RuzsaSpec::RuzsaSpec(RationalDist dist, std::uint64_t k) : dist_(std::move(dist)), k_(k) {
    const std::uint64_t k0 = minimal_suitable_k(dist_);
    if (k == 0 || k % k0 != 0)
        throw SuitabilityError("k = " + std::to_string(k) +
                               " is not a multiple of the minimal suitable k = " +
                               std::to_string(k0));
    counts_.reserve(dist_.size());
    for (const auto& p : dist_.probs()) {
        const BigInt c = p.get_num() * BigInt(std::to_string(k)) / p.get_den();
        counts_.push_back(to_u64(c));
    }
}

BigInt multinomial(std::span<const std::uint64_t> counts) {
    BigInt result = 1;
    std::uint64_t total = 0;
    for (const auto c : counts) {
        total += c;
        BigInt b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(total),
                     static_cast<unsigned long>(c));
        result *= b;
    }
    return result;
}

BigInt ruzsa_size(const RuzsaSpec& spec) { return multinomial(spec.counts()); }

bool is_member(const RuzsaSpec& spec, std::span<const GroundElement> v) {
    if (v.size() != spec.k()) return false;
    std::vector<std::uint64_t> seen(spec.dist().size(), 0);
    for (const auto& x : v) {
        const auto i = spec.dist().index_of(x);
        if (i < 0) return false;
        ++seen[static_cast<std::size_t>(i)];
    }
    return seen == spec.counts();
}

RuzsaEnumerator::RuzsaEnumerator(const RuzsaSpec& spec, const BigInt& limit)
    : spec_(spec), size_(ruzsa_size(spec)) {
    if (size_ > limit)
        throw SizeGuardError("|R_k(X)| = " + size_.get_str() + " exceeds the enumeration limit " +
                             limit.get_str());
    current_.reserve(spec.k());
    for (std::size_t i = 0; i < spec.counts().size(); ++i)
        current_.insert(current_.end(), spec.counts()[i], static_cast<std::uint32_t>(i));
}

const std::vector<std::uint32_t>* RuzsaEnumerator::next_indices() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        return &current_;
    }
    // Starting from the sorted multiset, next_permutation visits every distinct
    // arrangement exactly once, in lexicographic order.
    if (!std::next_permutation(current_.begin(), current_.end())) {
        done_ = true;
        return nullptr;
    }
    return &current_;
}

std::optional<RuzsaVector> RuzsaEnumerator::next() {
    const auto* idx = next_indices();
    if (idx == nullptr) return std::nullopt;
    RuzsaVector v;
    v.reserve(idx->size());
    for (auto i : *idx) v.push_back(spec_.dist().support()[i]);
    return v;
}

std::vector<RuzsaVector> ruzsa_enumerate(const RuzsaSpec& spec, const BigInt& limit) {
    RuzsaEnumerator e(spec, limit);
    std::vector<RuzsaVector> out;
    while (auto v = e.next()) out.push_back(std::move(*v));
    return out;
}

CheckReport verify_commutation(const FiniteMap& f, const RuzsaSpec& spec, const BigInt& limit) {
    const RationalDist& X = spec.dist();
    const RationalDist Y = pushforward(f, X);
    const RuzsaSpec image_spec(Y, spec.k());

    std::vector<std::uint32_t> image_of(X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
        image_of[i] = static_cast<std::uint32_t>(Y.index_of(f(X.support()[i])));

    RuzsaEnumerator domain_enum(spec, limit);
    RuzsaEnumerator image_enum(image_spec, limit);

    // f^k(R_k(X)), deduplicated.
    std::set<IndexVector> mapped;
    IndexVector buf(spec.k());
    while (const auto* idx = domain_enum.next_indices()) {
        for (std::size_t j = 0; j < idx->size(); ++j) buf[j] = image_of[(*idx)[j]];
        mapped.insert(buf);
    }
    // R_k(f(X)) directly from the pushforward counts.
    std::set<IndexVector> direct;
    while (const auto* idx = image_enum.next_indices()) direct.insert(*idx);

    std::vector<IndexVector> only_mapped;
    std::vector<IndexVector> only_direct;
    std::set_difference(mapped.begin(), mapped.end(), direct.begin(), direct.end(),
                        std::back_inserter(only_mapped));
    std::set_difference(direct.begin(), direct.end(), mapped.begin(), mapped.end(),
                        std::back_inserter(only_direct));

    CheckReport r;
    const bool equal = only_mapped.empty() && only_direct.empty();
    r.verdict = equal ? Verdict::holds : Verdict::violated;
    r.exact = true;
    r.lhs = static_cast<double>(mapped.size());
    r.rhs = static_cast<double>(direct.size());
    r.slack = r.rhs - r.lhs;
    r.lhs_exact = std::to_string(mapped.size());
    r.rhs_exact = std::to_string(direct.size());
    for (std::size_t i = 0; i < std::min(kMaxWitnesses, only_mapped.size()); ++i)
        r.witnesses.push_back({{"side", "image_only"}, {"vector", vector_json(only_mapped[i], Y)}});
    for (std::size_t i = 0; i < std::min(kMaxWitnesses, only_direct.size()); ++i)
        r.witnesses.push_back(
            {{"side", "ruzsa_set_only"}, {"vector", vector_json(only_direct[i], Y)}});
    r.details = {{"k", spec.k()},
                 {"domain_size", domain_enum.size().get_str()},
                 {"image_size", std::to_string(mapped.size())},
                 {"pushforward_ruzsa_size", image_enum.size().get_str()},
                 {"equal", equal}};
    return r;
}

RuzsaVector preimage_lift(const FiniteMap& f, const RuzsaSpec& spec,
                          std::span<const GroundElement> y) {
    const RationalDist& X = spec.dist();
    const RationalDist Y = pushforward(f, X);
    const RuzsaSpec image_spec(Y, spec.k());
    if (!is_member(image_spec, y)) throw MembershipError("y is not in R_k(f(X))");

    // Fibers in support order of X.
    std::vector<std::vector<std::size_t>> fiber(Y.size());
    for (std::size_t i = 0; i < X.size(); ++i)
        fiber[static_cast<std::size_t>(Y.index_of(f(X.support()[i])))].push_back(i);

    // Per image value: which preimage is being written, and how much of its
    // block is already used.
    std::vector<std::size_t> cursor(Y.size(), 0);
    std::vector<std::uint64_t> used(Y.size(), 0);

    RuzsaVector x;
    x.reserve(y.size());
    for (const auto& value : y) {
        const auto j = static_cast<std::size_t>(Y.index_of(value));
        while (used[j] == spec.counts()[fiber[j][cursor[j]]]) {
            ++cursor[j];
            used[j] = 0;
        }
        x.push_back(X.support()[fiber[j][cursor[j]]]);
        ++used[j];
    }

    if (!is_member(spec, x) || f.apply_power(x) != std::vector<GroundElement>(y.begin(), y.end()))
        throw std::logic_error("preimage lift produced an invalid vector");
    return x;
}

CheckReport type_bound_check(const RuzsaSpec& spec, const EvalOptions& opts) {
    const BigInt size = ruzsa_size(spec);
    const std::size_t n = spec.dist().size();

    // T = prod p_i^(-k p_i) = prod (r_i / q_i)^(c_i).
    Rational T = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& p = spec.dist().probs()[i];
        T *= pow(Rational(p.get_den(), p.get_num()), spec.counts()[i]);
    }
    T.canonicalize();
    const BigInt upper = pow(BigInt(std::to_string(spec.k() + 1)), n - 1) * size;

    const bool lower_ok = Rational(size) <= T;
    const bool upper_ok = T <= Rational(upper);

    const Rational ratio_lower = T / Rational(size);
    const Rational ratio_upper = Rational(upper) / T;

    auto log_rational = [&](const Rational& q) {
        return log_in(BigInt(q.get_num()), opts.base) - log_in(BigInt(q.get_den()), opts.base);
    };

    CheckReport r;
    r.verdict = lower_ok && upper_ok ? Verdict::holds : Verdict::violated;
    r.exact = true;
    r.lhs = log_in(size, opts.base);
    r.rhs = log_rational(T);
    r.slack = r.rhs - r.lhs;
    r.lhs_exact = size.get_str();
    r.rhs_exact = T.get_str();
    r.details = {{"k", spec.k()},
                 {"n", n},
                 {"upper", upper.get_str()},
                 {"lower_holds", lower_ok},
                 {"upper_holds", upper_ok},
                 {"ratio_T_over_size", ratio_lower.get_str()},
                 {"ratio_upper_over_T", ratio_upper.get_str()},
                 {"ratio_T_over_size_float", ratio_lower.get_d()},
                 {"ratio_upper_over_T_float", ratio_upper.get_d()}};
    return r;
}

std::vector<ConvergenceRow> convergence_profile(const RationalDist& dist,
                                                std::span<const std::uint64_t> ks,
                                                const EvalOptions& opts) {
    const double h = entropy(dist, opts.base);
    const double n = static_cast<double>(dist.size());
    std::vector<ConvergenceRow> rows;
    rows.reserve(ks.size());
    for (const auto k : ks) {
        const RuzsaSpec spec(dist, k);
        const double kd = static_cast<double>(k);
        ConvergenceRow row;
        row.k = k;
        row.rate = log_in(ruzsa_size(spec), opts.base) / kd;
        row.entropy = h;
        row.gap = h - row.rate;
        row.envelope = (n - 1.0) * log_in(kd + 1.0, opts.base) / kd;
        row.within = row.gap >= -opts.tolerance && row.gap <= row.envelope + opts.tolerance;
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json to_json(const ConvergenceRow& row) {
    return {{"k", row.k},         {"rate", row.rate},         {"entropy", row.entropy},
            {"gap", row.gap},     {"envelope", row.envelope}, {"within", row.within}};
}

}  // namespace ruzsakit
