#pragma once

#include "bidisk/harness.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace bidisk {

/// Decimal text with 17 significant digits.
std::string format_double(double v);

nlohmann::json to_json(const BoundCheckRecord& r);
nlohmann::json to_json(const TheoremSummary& s);

/// {"records": [...], "summary": [{theorem, samples, violations, min_margin}, ...]}
nlohmann::json to_json(const SweepReport& report);

/// CSV with header theorem,z_re,z_im,lhs,rhs,margin,holds.
void write_csv(std::ostream& out, const std::vector<BoundCheckRecord>& records);

} // namespace bidisk
