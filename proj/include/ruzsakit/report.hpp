#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ruzsakit/rational.hpp"

namespace ruzsakit {

enum class Verdict { holds, violated, inconclusive };

std::string_view to_string(Verdict v) noexcept;

// Knobs shared by every evaluation. Comparisons of float quantities use an
// absolute tolerance; exact comparisons ignore it.
struct EvalOptions {
    LogBase base = LogBase::two;
    double tolerance = 1e-9;
};

// Evaluated sides of an inequality lhs <= rhs.
//
// lhs/rhs are always filled with floats (in log-space for cardinality checks);
// lhs_exact/rhs_exact carry the exact value as a string when one is available.
struct CheckReport {
    Verdict verdict = Verdict::inconclusive;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    std::optional<std::string> lhs_exact;
    std::optional<std::string> rhs_exact;
    bool exact = false;  // verdict decided by exact arithmetic
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json details = nlohmann::json::object();

    bool holds() const noexcept { return verdict == Verdict::holds; }
};

nlohmann::json to_json(const CheckReport& report);

// Float verdict for lhs <= rhs: holds when slack >= -tolerance.
Verdict judge(double slack, double tolerance) noexcept;

}  // namespace ruzsakit
