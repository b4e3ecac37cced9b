#include "hpdcover/curve_io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <json.hpp>
#include <ostream>

#include "hpdcover/errors.hpp"
#include "hpdcover/interval.hpp"

namespace hpdcover {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_curve_csv(std::ostream& os, const CoverageCurve& curve) {
    os << "theta,coverage,region,side\n";
    for (const auto& p : curve.points) {
        os << format_double(p.theta) << ',' << format_double(p.coverage) << ','
           << to_string(p.region) << ',' << to_string(p.side) << '\n';
    }
}

void write_curve_json(std::ostream& os, const CoverageCurve& curve) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& p : curve.points) {
        records.push_back({{"theta", p.theta},
                           {"coverage", p.coverage},
                           {"region", to_string(p.region)},
                           {"side", to_string(p.side)}});
    }
    os << records.dump(2) << '\n';
}

namespace {

Region region_from_string(const std::string& s) {
    if (s == "below_a") return Region::BelowA;
    if (s == "mid") return Region::Mid;
    if (s == "above_2d0") return Region::Above2d0;
    throw InvalidRequest("unknown region '" + s + "' in curve CSV");
}

Side side_from_string(const std::string& s) {
    if (s.empty()) return Side::None;
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    throw InvalidRequest("unknown side '" + s + "' in curve CSV");
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw InvalidRequest("bad number '" + s + "' in curve CSV");
    return v;
}

}  // namespace

CoverageCurve read_curve_csv(std::istream& is, const LocationFamily& family, Alpha alpha) {
    std::string line;
    if (!std::getline(is, line) || line != "theta,coverage,region,side")
        throw InvalidRequest("curve CSV must start with 'theta,coverage,region,side'");

    CoverageCurve curve;
    curve.family_name = family.name;
    curve.alpha = alpha.value();
    curve.constants = family_constants(family, alpha);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::array<std::string, 4> fields;
        size_t start = 0;
        for (int k = 0; k < 4; ++k) {
            const size_t comma = line.find(',', start);
            if (k < 3) {
                if (comma == std::string::npos)
                    throw InvalidRequest("curve CSV row with fewer than 4 fields");
                fields[static_cast<size_t>(k)] = line.substr(start, comma - start);
                start = comma + 1;
            } else {
                if (comma != std::string::npos)
                    throw InvalidRequest("curve CSV row with more than 4 fields");
                fields[static_cast<size_t>(k)] = line.substr(start);
            }
        }
        CoveragePoint p;
        p.theta = parse_double(fields[0]);
        p.coverage = parse_double(fields[1]);
        p.region = region_from_string(fields[2]);
        p.side = side_from_string(fields[3]);
        curve.points.push_back(p);
    }
    return curve;
}

void write_report_text(std::ostream& os, const BoundsReport& r) {
    os << "alpha = " << format_double(r.alpha) << '\n'
       << "new_lower_bound = " << format_double(r.new_lower_bound) << '\n'
       << "bracket_upper = " << format_double(r.bracket_upper) << '\n'
       << "legacy_lower_bound = " << format_double(r.legacy_lower_bound) << '\n'
       << "sup_upper = " << format_double(r.sup_upper) << '\n'
       << "sup_lower = " << format_double(r.sup_lower) << '\n'
       << "min_location = " << format_double(r.min_location) << '\n'
       << "audited_min = " << format_double(r.audited_min) << '\n'
       << "audited_argmin = " << format_double(r.audited_argmin) << '\n'
       << "audited_sup = " << format_double(r.audited_sup) << '\n';
    for (const auto& a : r.audits) {
        os << "audit " << a.name << " = " << (a.pass ? "pass" : "FAIL")
           << " margin " << format_double(a.margin) << '\n';
    }
}

void write_report_json(std::ostream& os, const BoundsReport& r) {
    nlohmann::json audits = nlohmann::json::array();
    for (const auto& a : r.audits)
        audits.push_back({{"name", a.name}, {"pass", a.pass}, {"margin", a.margin}});
    const nlohmann::json doc = {{"alpha", r.alpha},
                                {"new_lower_bound", r.new_lower_bound},
                                {"bracket_upper", r.bracket_upper},
                                {"legacy_lower_bound", r.legacy_lower_bound},
                                {"sup_upper", r.sup_upper},
                                {"sup_lower", r.sup_lower},
                                {"min_location", r.min_location},
                                {"audited_min", r.audited_min},
                                {"audited_argmin", r.audited_argmin},
                                {"audited_sup", r.audited_sup},
                                {"audits", audits}};
    os << doc.dump(2) << '\n';
}

}  // namespace hpdcover
