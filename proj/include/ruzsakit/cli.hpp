#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ruzsakit/rational.hpp"
#include "ruzsakit/report.hpp"

namespace ruzsakit::cli {

enum class OutputFormat { json, table };

struct RunConfig {
    double tolerance = 1e-9;
    LogBase log_base = LogBase::two;
    BigInt enum_limit{1000000};
    std::uint64_t seed = 1;
    OutputFormat format = OutputFormat::json;

    EvalOptions eval() const { return {log_base, tolerance}; }
};

// Exit codes.
inline constexpr int kHolds = 0;
inline constexpr int kViolated = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInconclusive = 3;

int exit_code(Verdict v) noexcept;

// Parses argv, dispatches one subcommand and writes exactly one JSON document
// (or its table rendering) to `out`. Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Random A in {0,1,2}^3 (or a product set), Loomis-Whitney on A, Han on the
// uniform variable over A, and the finite-k Ruzsa-set run for every suitable
// k <= 12.
nlohmann::json demo_equivalence(std::uint64_t seed, bool product, const EvalOptions& opts);

// Human-readable rendering of a report document.
std::string render_table(const nlohmann::json& doc);

}  // namespace ruzsakit::cli
