#ifndef TORUSGREEN_SVG_HPP
#define TORUSGREEN_SVG_HPP

// Minimal line-chart writer. Produces a standalone SVG 1.1 document with no
// external references (no fonts, no scripts, no links), suitable for opening
// directly in a browser. Pixel coordinates are emitted with "%.2f" so the
// output is byte-stable.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace torusgreen {

namespace detail {

inline std::string xml_escape(const std::string& s)
{
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string px(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string tick_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct axis_scale {
    double lo;
    double hi;
    bool log;

    double place(double v, double pix_lo, double pix_hi) const
    {
        const double a = log ? std::log10(v) : v;
        const double l = log ? std::log10(lo) : lo;
        const double h = log ? std::log10(hi) : hi;
        return pix_lo + (a - l) / (h - l) * (pix_hi - pix_lo);
    }
};

inline axis_scale make_scale(const std::vector<double>& values, bool log, const char* axis_name)
{
    double lo = values.front();
    double hi = values.front();
    for (const double v : values) {
        if (!is_finite(v))
            throw domain_error(std::string("svg_line_chart: non-finite value on the ") + axis_name
                               + " axis");
        if (log && !(v > 0.0))
            throw domain_error(std::string("svg_line_chart: log scale on the ") + axis_name
                               + " axis requires positive values");
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo == hi) {
        // degenerate span, pad so the point sits mid-chart
        if (log) {
            lo /= 2.0;
            hi *= 2.0;
        } else {
            const double pad = std::max(1.0, std::abs(lo)) * 1e-3;
            lo -= pad;
            hi += pad;
        }
    }
    return {lo, hi, log};
}

} // namespace detail

/// Single-series line chart, 800 x 500. Throws domain_error on empty or
/// mismatched inputs, non-finite values, or log scaling of non-positive data.
inline std::string svg_line_chart(const std::vector<double>& xs, const std::vector<double>& ys,
                                  const std::string& title, const std::string& x_label,
                                  const std::string& y_label, bool log_x = false,
                                  bool log_y = false)
{
    if (xs.size() != ys.size())
        throw domain_error("svg_line_chart: x and y lengths differ");
    if (xs.size() < 2)
        throw domain_error("svg_line_chart: need at least two points");

    const double width = 800.0;
    const double height = 500.0;
    const double left = 80.0;
    const double right = width - 30.0;
    const double top = 50.0;
    const double bottom = height - 60.0;
    const int ticks = 5;

    const detail::axis_scale sx = detail::make_scale(xs, log_x, "x");
    const detail::axis_scale sy = detail::make_scale(ys, log_y, "y");

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"500\" "
           "viewBox=\"0 0 800 500\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
    out += "  <text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" + detail::xml_escape(title) + "</text>\n";

    // grid and tick labels
    for (int i = 0; i < ticks; ++i) {
        const double f = static_cast<double>(i) / (ticks - 1);
        const double xv = sx.log ? std::pow(10.0, std::log10(sx.lo) + f * (std::log10(sx.hi) - std::log10(sx.lo)))
                                 : sx.lo + f * (sx.hi - sx.lo);
        const double yv = sy.log ? std::pow(10.0, std::log10(sy.lo) + f * (std::log10(sy.hi) - std::log10(sy.lo)))
                                 : sy.lo + f * (sy.hi - sy.lo);
        const double xp = sx.place(xv, left, right);
        const double yp = sy.place(yv, bottom, top);
        out += "  <line x1=\"" + detail::px(xp) + "\" y1=\"" + detail::px(top) + "\" x2=\""
               + detail::px(xp) + "\" y2=\"" + detail::px(bottom)
               + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out += "  <line x1=\"" + detail::px(left) + "\" y1=\"" + detail::px(yp) + "\" x2=\""
               + detail::px(right) + "\" y2=\"" + detail::px(yp)
               + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out += "  <text x=\"" + detail::px(xp) + "\" y=\"" + detail::px(bottom + 18.0)
               + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
               + detail::xml_escape(detail::tick_label(xv)) + "</text>\n";
        out += "  <text x=\"" + detail::px(left - 8.0) + "\" y=\"" + detail::px(yp + 4.0)
               + "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
               + detail::xml_escape(detail::tick_label(yv)) + "</text>\n";
    }

    // axes
    out += "  <line x1=\"" + detail::px(left) + "\" y1=\"" + detail::px(top) + "\" x2=\""
           + detail::px(left) + "\" y2=\"" + detail::px(bottom)
           + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out += "  <line x1=\"" + detail::px(left) + "\" y1=\"" + detail::px(bottom) + "\" x2=\""
           + detail::px(right) + "\" y2=\"" + detail::px(bottom)
           + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out += "  <text x=\"" + detail::px((left + right) / 2.0) + "\" y=\"" + detail::px(height - 18.0)
           + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
           + detail::xml_escape(x_label) + "</text>\n";
    out += "  <text x=\"22\" y=\"" + detail::px((top + bottom) / 2.0)
           + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
             "transform=\"rotate(-90 22 " + detail::px((top + bottom) / 2.0) + ")\">"
           + detail::xml_escape(y_label) + "</text>\n";

    // the series itself
    out += "  <polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0)
            out += " ";
        out += detail::px(sx.place(xs[i], left, right)) + "," + detail::px(sy.place(ys[i], bottom, top));
    }
    out += "\"/>\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += "  <circle cx=\"" + detail::px(sx.place(xs[i], left, right)) + "\" cy=\""
               + detail::px(sy.place(ys[i], bottom, top)) + "\" r=\"3\" fill=\"#1f5fa8\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace torusgreen

#endif
