#ifndef TORUSGREEN_FORMAT_HPP
#define TORUSGREEN_FORMAT_HPP

// Deterministic number/text formatting and the complex-literal grammar used
// by the CLI and the serializers:
//
//   "a+bi" | "a-bi" | "a" | "bi"     components decimal or scientific
//
// format/parse round-trip exactly for finite doubles (%.17g).

#include <cerrno>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace torusgreen {

/// Shortest-round-trip-safe decimal form of a double (17 significant digits).
inline std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Complex literal "a+bi" / "a-bi" / "a" / "bi".
inline std::string format_complex(complex z)
{
    if (z.imag() == 0.0)
        return format_double(z.real());
    const std::string im = format_double(z.imag());
    if (z.real() == 0.0)
        return im + "i";
    if (im[0] == '-')
        return format_double(z.real()) + im + "i";
    return format_double(z.real()) + "+" + im + "i";
}

namespace detail {

inline double parse_component(std::string_view text, std::string_view whole)
{
    if (text.empty() || text == "+" || text == "-")
        throw parse_error("invalid complex literal '" + std::string(whole) + "'");
    const char first = text.front();
    if (!(first == '+' || first == '-' || first == '.' || (first >= '0' && first <= '9')))
        throw parse_error("invalid complex literal '" + std::string(whole) + "'");
    // strtod would accept hex floats; the literal grammar is decimal only
    if (text.find_first_of("xX") != std::string_view::npos)
        throw parse_error("invalid complex literal '" + std::string(whole) + "'");
    const std::string token(text);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size())
        throw parse_error("invalid numeric component '" + token + "' in '" + std::string(whole) + "'");
    if (!std::isfinite(v))
        throw parse_error("non-finite component '" + token + "' in '" + std::string(whole) + "'");
    return v;
}

} // namespace detail

/// Parses the complex-literal grammar; rejects anything else (whitespace,
/// bare "i", non-finite components).
inline complex parse_complex_literal(std::string_view s)
{
    if (s.empty())
        throw parse_error("empty complex literal");
    if (s.back() != 'i')
        return {detail::parse_component(s, s), 0.0};
    const std::string_view body = s.substr(0, s.size() - 1);
    if (body.empty())
        throw parse_error("invalid complex literal '" + std::string(s) + "'");
    // split at the last sign that is neither leading nor an exponent sign
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char ch = body[k];
        if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos)
        return {0.0, detail::parse_component(body, s)};
    return {detail::parse_component(body.substr(0, split), s),
            detail::parse_component(body.substr(split), s)};
}

/// Parses "start:stop:step" (step > 0, start <= stop) into the inclusive
/// arithmetic progression start, start+step, ..., up to stop (with a relative
/// slack of one part in 1e9 on the endpoint).
inline std::vector<double> parse_range(std::string_view s)
{
    const std::size_t c1 = s.find(':');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : s.find(':', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
        s.find(':', c2 + 1) != std::string_view::npos)
        throw parse_error("range must have the form start:stop:step, got '" + std::string(s) + "'");
    const double start = detail::parse_component(s.substr(0, c1), s);
    const double stop = detail::parse_component(s.substr(c1 + 1, c2 - c1 - 1), s);
    const double step = detail::parse_component(s.substr(c2 + 1), s);
    if (!(step > 0.0))
        throw parse_error("range step must be positive in '" + std::string(s) + "'");
    if (stop < start)
        throw parse_error("range stop must be >= start in '" + std::string(s) + "'");
    std::vector<double> values;
    const double slack = stop + step * 1e-9;
    for (std::size_t k = 0;; ++k) {
        const double v = start + static_cast<double>(k) * step;
        if (v > slack)
            break;
        values.push_back(v);
    }
    return values;
}

/// Parses a comma-separated list of doubles.
inline std::vector<double> parse_double_list(std::string_view s)
{
    std::vector<double> values;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = s.find(',', pos);
        const std::string_view token =
            comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
        values.push_back(detail::parse_component(token, s));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return values;
}

} // namespace torusgreen

#endif
