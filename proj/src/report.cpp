#include "bidisk/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace bidisk {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

// JSON has no infinities; an empty summary reports a null margin.
nlohmann::json number_or_null(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

} // namespace

nlohmann::json to_json(const BoundCheckRecord& r) {
    return {{"theorem", std::string(to_string(r.theorem))},
            {"z", {r.z.real(), r.z.imag()}},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"margin", r.margin},
            {"holds", r.holds}};
}

nlohmann::json to_json(const TheoremSummary& s) {
    return {{"theorem", std::string(to_string(s.theorem))},
            {"samples", s.samples},
            {"violations", s.violations},
            {"min_margin", number_or_null(s.min_margin)}};
}

nlohmann::json to_json(const SweepReport& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) records.push_back(to_json(r));
    nlohmann::json summary = nlohmann::json::array();
    for (const auto& s : report.summaries) summary.push_back(to_json(s));
    return {{"records", std::move(records)}, {"summary", std::move(summary)}, {"violations", report.violations()}};
}

void write_csv(std::ostream& out, const std::vector<BoundCheckRecord>& records) {
    out << "theorem,z_re,z_im,lhs,rhs,margin,holds\n";
    for (const auto& r : records) {
        out << to_string(r.theorem) << ',' << format_double(r.z.real()) << ',' << format_double(r.z.imag()) << ','
            << format_double(r.lhs) << ',' << format_double(r.rhs) << ',' << format_double(r.margin) << ','
            << (r.holds ? "true" : "false") << '\n';
    }
}

} // namespace bidisk
