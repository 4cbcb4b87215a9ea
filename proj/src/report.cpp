#include "ruzsakit/report.hpp"

namespace ruzsakit {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

nlohmann::json to_json(const CheckReport& report) {
    nlohmann::json j;
    j["verdict"] = to_string(report.verdict);
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["slack"] = report.slack;
    j["exact"] = report.exact;
    if (report.lhs_exact) j["lhs_exact"] = *report.lhs_exact;
    if (report.rhs_exact) j["rhs_exact"] = *report.rhs_exact;
    j["witnesses"] = report.witnesses;
    if (!report.details.empty()) j["details"] = report.details;
    return j;
}

Verdict judge(double slack, double tolerance) noexcept {
    return slack >= -tolerance ? Verdict::holds : Verdict::violated;
}

}  // namespace ruzsakit
