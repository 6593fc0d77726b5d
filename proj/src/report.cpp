#include "delannoy/report.hpp"

#include <algorithm>

namespace delannoy {

std::string_view mode_name(Mode mode) {
    switch (mode) {
    case Mode::SymbolicPoly: return "symbolic-poly";
    case Mode::ClearedDenominator: return "cleared-denominator";
    case Mode::InterpolationGrid: return "interpolation-grid";
    case Mode::PointGrid: return "point-grid";
    }
    return "unknown";
}

void VerifyReport::skip(std::string point, std::string reason) {
    SkippedPoint sp{std::move(point), std::move(reason)};
    if (std::find(skipped_points.begin(), skipped_points.end(), sp) == skipped_points.end())
        skipped_points.push_back(std::move(sp));
}

void VerifyReport::cover(std::string_view identity) {
    if (std::find(identities.begin(), identities.end(), identity) == identities.end())
        identities.emplace_back(identity);
}

nlohmann::ordered_json to_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["id"] = report.identity_id;
    j["mode"] = std::string(mode_name(report.mode));
    j["range"] = report.range;
    j["passed"] = report.passed();
    if (const auto& cx = report.counterexample()) {
        j["counterexample"] = {{"identity", cx->identity},
                               {"parameters", cx->parameters},
                               {"lhs", cx->lhs},
                               {"rhs", cx->rhs}};
    }
    j["identities"] = report.identities;
    j["checks"] = report.checks;
    if (report.degree_bound) j["degree_bound"] = *report.degree_bound;
    if (report.samples) j["samples"] = *report.samples;
    auto skipped = nlohmann::ordered_json::array();
    for (const auto& s : report.skipped_points)
        skipped.push_back({{"point", s.point}, {"reason", s.reason}});
    j["skipped"] = std::move(skipped);
    return j;
}

std::string to_json_line(const VerifyReport& report) { return to_json(report).dump(); }

std::string to_text_line(const VerifyReport& report) {
    std::string line = report.passed() ? "PASS " : "FAIL ";
    line += report.identity_id + " [" + std::string(mode_name(report.mode)) + "] " +
            report.range + " (" + std::to_string(report.checks) + " checks";
    if (!report.skipped_points.empty())
        line += ", " + std::to_string(report.skipped_points.size()) + " skipped";
    line += ")";
    if (const auto& cx = report.counterexample())
        line += " counterexample " + cx->identity + " at " + cx->parameters + ": lhs=" +
                cx->lhs + " rhs=" + cx->rhs;
    return line;
}

} // namespace delannoy
