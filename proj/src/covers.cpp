#include "ruzsakit/covers.hpp"

#include <algorithm>
#include <stdexcept>

#include "ruzsakit/errors.hpp"

namespace ruzsakit {

CoverSpec::CoverSpec(std::size_t n, std::vector<IndexSet> members,
                     std::optional<std::vector<Rational>> weights)
    : n_(n), members_(std::move(members)), weights_(std::move(weights)) {
    if (n_ == 0) throw SchemaError("cover ground set [n] needs n >= 1");
    for (const auto& S : members_) {
        if (S.empty()) throw IndexError("empty cover member");
        S.check_within(n_);
    }
    if (weights_) {
        if (weights_->size() != members_.size())
            throw SchemaError("cover has " + std::to_string(members_.size()) + " members but " +
                              std::to_string(weights_->size()) + " weights");
        for (auto& w : *weights_) {
            w.canonicalize();
            if (w < 0) throw SchemaError("negative cover weight " + w.get_str());
        }
    }
}

std::vector<std::uint64_t> CoverSpec::multiplicities() const {
    std::vector<std::uint64_t> counts(n_, 0);
    for (const auto& S : members_)
        for (auto i : S.indices()) ++counts[i - 1];
    return counts;
}

std::vector<Rational> CoverSpec::coverage() const {
    if (!weights_) throw SchemaError("cover has no weights");
    std::vector<Rational> sums(n_, Rational(0));
    for (std::size_t j = 0; j < members_.size(); ++j)
        for (auto i : members_[j].indices()) sums[i - 1] += (*weights_)[j];
    return sums;
}

CheckReport is_fractional_cover(const CoverSpec& cover) {
    const auto sums = cover.coverage();
    const auto min_it = std::min_element(sums.begin(), sums.end());

    CheckReport r;
    r.exact = true;
    r.verdict = *min_it >= 1 ? Verdict::holds : Verdict::violated;
    r.lhs = 1.0;
    r.rhs = min_it->get_d();
    r.slack = r.rhs - r.lhs;
    r.lhs_exact = "1";
    r.rhs_exact = min_it->get_str();
    nlohmann::json coverage = nlohmann::json::array();
    for (std::size_t i = 0; i < sums.size(); ++i) {
        coverage.push_back(sums[i].get_str());
        if (sums[i] < 1) r.witnesses.push_back({{"element", i + 1}, {"coverage", sums[i].get_str()}});
    }
    r.details = {{"coverage", coverage}};
    return r;
}

CheckReport is_uniform_k_cover(const CoverSpec& cover, std::uint64_t k) {
    const auto counts = cover.multiplicities();
    const bool uniform = std::all_of(counts.begin(), counts.end(), [&](auto c) { return c == k; });
    const bool k_cover = std::all_of(counts.begin(), counts.end(), [&](auto c) { return c >= k; });

    CheckReport r;
    r.exact = true;
    r.verdict = uniform ? Verdict::holds : Verdict::violated;
    const auto min_count = *std::min_element(counts.begin(), counts.end());
    r.lhs = static_cast<double>(k);
    r.rhs = static_cast<double>(min_count);
    r.slack = r.rhs - r.lhs;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != k) r.witnesses.push_back({{"element", i + 1}, {"count", counts[i]}});
    r.details = {{"k", k}, {"counts", counts}, {"uniform", uniform}, {"k_cover", k_cover}};
    return r;
}

namespace {

// Dense tableau for  max c'x  s.t.  A x + s = b,  x, s >= 0,  b >= 0,
// started from the all-slack basis and pivoted with Bland's rule.
class BlandSimplex {
public:
    BlandSimplex(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
                 std::vector<Rational> objective)
        : m_(rows.size()), cols_(objective.size() + rows.size()) {
        const std::size_t nvars = objective.size();
        tab_.assign(m_, std::vector<Rational>(cols_, Rational(0)));
        for (std::size_t r = 0; r < m_; ++r) {
            for (std::size_t c = 0; c < nvars; ++c) tab_[r][c] = rows[r][c];
            tab_[r][nvars + r] = 1;
        }
        rhs_ = std::move(rhs);
        reduced_.assign(cols_, Rational(0));
        for (std::size_t c = 0; c < nvars; ++c) reduced_[c] = objective[c];
        basis_.resize(m_);
        for (std::size_t r = 0; r < m_; ++r) basis_[r] = nvars + r;
    }

    // Returns false if the objective is unbounded.
    bool solve() {
        while (true) {
            std::size_t enter = cols_;
            for (std::size_t c = 0; c < cols_; ++c) {
                if (reduced_[c] > 0) {
                    enter = c;
                    break;
                }
            }
            if (enter == cols_) return true;

            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t r = 0; r < m_; ++r) {
                if (tab_[r][enter] <= 0) continue;
                Rational ratio = rhs_[r] / tab_[r][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    leave = r;
                    best_ratio = std::move(ratio);
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    const Rational& value() const noexcept { return value_; }
    // Reduced profit of column c; at an optimum, minus this is the dual price
    // of the constraint whose slack is column c.
    const Rational& reduced(std::size_t c) const { return reduced_[c]; }

private:
    void pivot(std::size_t row, std::size_t col) {
        const Rational piv = tab_[row][col];
        for (auto& v : tab_[row]) v /= piv;
        rhs_[row] /= piv;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == row || tab_[r][col] == 0) continue;
            const Rational factor = tab_[r][col];
            for (std::size_t c = 0; c < cols_; ++c) tab_[r][c] -= factor * tab_[row][c];
            rhs_[r] -= factor * rhs_[row];
        }
        const Rational factor = reduced_[col];
        for (std::size_t c = 0; c < cols_; ++c) reduced_[c] -= factor * tab_[row][c];
        value_ += factor * rhs_[row];
        basis_[row] = col;
    }

    std::size_t m_;
    std::size_t cols_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> rhs_;
    std::vector<Rational> reduced_;
    std::vector<std::size_t> basis_;
    Rational value_ = 0;
};

}  // namespace

LPSolution min_fractional_cover(std::size_t n, const std::vector<IndexSet>& members) {
    const CoverSpec cover(n, members);
    const auto counts = cover.multiplicities();
    for (std::size_t i = 0; i < n; ++i)
        if (counts[i] == 0)
            throw InfeasibleError("element " + std::to_string(i + 1) + " is in no member");

    // Dual: one variable per element of [n], one row per member.
    const std::size_t m = members.size();
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n, Rational(0)));
    for (std::size_t j = 0; j < m; ++j)
        for (auto i : members[j].indices()) rows[j][i - 1] = 1;
    BlandSimplex lp(std::move(rows), std::vector<Rational>(m, Rational(1)),
                    std::vector<Rational>(n, Rational(1)));
    if (!lp.solve()) throw InfeasibleError("cover LP is infeasible");

    LPSolution sol;
    sol.weights.reserve(m);
    for (std::size_t j = 0; j < m; ++j) sol.weights.push_back(-lp.reduced(n + j));
    sol.objective = 0;
    for (const auto& w : sol.weights) sol.objective += w;

    const CoverSpec weighted(n, members, sol.weights);
    sol.coverage = weighted.coverage();
    // Strong duality and primal feasibility, both exact.
    if (sol.objective != lp.value() ||
        std::any_of(sol.coverage.begin(), sol.coverage.end(), [](const Rational& c) { return c < 1; }))
        throw std::logic_error("simplex returned an inconsistent cover");
    return sol;
}

CoverSpec scaled_uniform(const CoverSpec& cover, std::uint64_t k) {
    if (k == 0) throw SchemaError("k must be positive");
    Rational scale(1, static_cast<unsigned long>(k));
    scale.canonicalize();
    std::vector<Rational> weights;
    weights.reserve(cover.members().size());
    if (cover.weights()) {
        for (const auto& w : *cover.weights()) weights.push_back(w * scale);
    } else {
        weights.assign(cover.members().size(), scale);
    }
    return CoverSpec(cover.n(), cover.members(), std::move(weights));
}

}  // namespace ruzsakit
