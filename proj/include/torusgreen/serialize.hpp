#ifndef TORUSGREEN_SERIALIZE_HPP
#define TORUSGREEN_SERIALIZE_HPP

// JSON and CSV emitters for reports and scan tables. Everything is written
// by hand so the byte layout is pinned: stable key order, "%.17g" numbers,
// '\n' newlines. Identical inputs serialize to identical bytes, which the
// reproducibility checks rely on.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "format.hpp"
#include "report.hpp"
#include "scans.hpp"

namespace torusgreen {

inline std::string json_escape(const std::string& s)
{
    std::string out;
    out.reserve(s.size() + 8);
    for (const char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c) & 0xff);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

/// JSON has no literal for non-finite numbers; those are emitted as strings
/// so a report carrying an inf/nan residual still parses.
inline std::string json_number(double v)
{
    if (is_finite(v))
        return format_double(v);
    return "\"" + format_double(v) + "\"";
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string reports_to_json(const std::vector<verification_report>& reports)
{
    std::string out = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const verification_report& r = reports[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\n";
        out += "      \"check_name\": \"" + json_escape(r.check_name) + "\",\n";
        out += "      \"samples\": " + std::to_string(r.samples) + ",\n";
        out += "      \"max_residual\": " + json_number(r.max_residual) + ",\n";
        out += "      \"tolerance\": " + json_number(r.tolerance) + ",\n";
        out += std::string("      \"passed\": ") + (r.passed ? "true" : "false") + ",\n";
        out += "      \"details\": [";
        for (std::size_t j = 0; j < r.details.size(); ++j) {
            out += j == 0 ? "\n" : ",\n";
            out += "        {\"input\": \"" + json_escape(r.details[j].input)
                   + "\", \"residual\": " + json_number(r.details[j].residual) + "}";
        }
        out += r.details.empty() ? "]\n" : "\n      ]\n";
        out += "    }";
    }
    out += reports.empty() ? "]" : "\n  ]";
    return out;
}

/// Envelope written by the verification runner: the inputs that produced the
/// report list, the overall verdict, then the checks themselves.
inline std::string verify_output_to_json(std::uint64_t seed, const std::vector<complex>& moduli,
                                         const std::vector<verification_report>& reports)
{
    bool all = true;
    for (const verification_report& r : reports)
        all = all && r.passed;
    std::string out = "{\n";
    out += "  \"seed\": " + std::to_string(seed) + ",\n";
    out += "  \"moduli\": [";
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += "\"" + json_escape(format_complex(moduli[i])) + "\"";
    }
    out += "],\n";
    out += std::string("  \"all_passed\": ") + (all ? "true" : "false") + ",\n";
    out += "  \"checks\": " + reports_to_json(reports) + "\n";
    out += "}\n";
    return out;
}

inline std::string reports_to_csv(const std::vector<verification_report>& reports)
{
    std::string out = "check_name,samples,max_residual,tolerance,passed\n";
    for (const verification_report& r : reports) {
        out += csv_field(r.check_name) + "," + std::to_string(r.samples) + ","
               + format_double(r.max_residual) + "," + format_double(r.tolerance) + ","
               + (r.passed ? "true" : "false") + "\n";
    }
    return out;
}

inline std::string puncture_scan_to_csv(const std::vector<puncture_scan_row>& rows)
{
    std::string out = "radius,k,c_fund,c_times_r,ratio,ratio_normalized\n";
    for (const puncture_scan_row& r : rows) {
        out += format_double(r.radius) + "," + format_double(r.sample.k) + ","
               + format_double(r.sample.c) + "," + format_double(r.c_times_radius) + ","
               + format_double(r.sample.ratio) + "," + format_double(r.ratio_normalized) + "\n";
    }
    return out;
}

inline std::string puncture_scan_to_json(const std::vector<puncture_scan_row>& rows)
{
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const puncture_scan_row& r = rows[i];
        out += i == 0 ? "\n" : ",\n";
        out += "  {\"radius\": " + json_number(r.radius)
               + ", \"k\": " + json_number(r.sample.k)
               + ", \"c_fund\": " + json_number(r.sample.c)
               + ", \"c_times_r\": " + json_number(r.c_times_radius)
               + ", \"ratio\": " + json_number(r.sample.ratio)
               + ", \"ratio_normalized\": " + json_number(r.ratio_normalized) + "}";
    }
    out += rows.empty() ? "]\n" : "\n]\n";
    return out;
}

inline std::string degeneration_scan_to_csv(const std::vector<degeneration_row>& rows)
{
    std::string out = "im_tau,ratio_punctured,ratio_torus,c_fund,c_limit\n";
    for (const degeneration_row& r : rows) {
        out += format_double(r.im_tau) + "," + format_double(r.sample.ratio) + ","
               + format_double(r.ratio_torus) + "," + format_double(r.sample.c) + ","
               + format_double(r.c_limit) + "\n";
    }
    return out;
}

inline std::string degeneration_scan_to_json(const std::vector<degeneration_row>& rows)
{
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const degeneration_row& r = rows[i];
        out += i == 0 ? "\n" : ",\n";
        out += "  {\"im_tau\": " + json_number(r.im_tau)
               + ", \"ratio_punctured\": " + json_number(r.sample.ratio)
               + ", \"ratio_torus\": " + json_number(r.ratio_torus)
               + ", \"c_fund\": " + json_number(r.sample.c)
               + ", \"c_limit\": " + json_number(r.c_limit) + "}";
    }
    out += rows.empty() ? "]\n" : "\n]\n";
    return out;
}

} // namespace torusgreen

#endif
