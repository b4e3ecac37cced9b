#pragma once

#include <iosfwd>
#include <string>

#include "hpdcover/bounds.hpp"
#include "hpdcover/coverage.hpp"

namespace hpdcover {

/// Shortest round-trip decimal form of a double, locale-independent.
std::string format_double(double v);

/// CSV with the fixed header "theta,coverage,region,side", one row per
/// point; the jump at theta = a appears as two rows with sides left/right.
void write_curve_csv(std::ostream& os, const CoverageCurve& curve);

/// JSON array mirroring the CSV fields, one record per point.
void write_curve_json(std::ostream& os, const CoverageCurve& curve);

/// Reads a curve back from its CSV form. The file carries no family or
/// alpha metadata, so constants are recomputed from the arguments.
CoverageCurve read_curve_csv(std::istream& is, const LocationFamily& family, Alpha alpha);

/// Flat "key = value" rendering of a bounds report, audits last.
void write_report_text(std::ostream& os, const BoundsReport& report);

/// Structured rendering of the same report.
void write_report_json(std::ostream& os, const BoundsReport& report);

}  // namespace hpdcover
