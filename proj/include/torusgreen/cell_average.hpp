#ifndef TORUSGREEN_CELL_AVERAGE_HPP
#define TORUSGREEN_CELL_AVERAGE_HPP

// Exact mean of log|z - pole| over a convex polygon. Used by the mean-zero
// check to integrate the Green function analytically over the grid cell that
// contains the pole, where midpoint sampling would be meaningless.
//
// Derivation: with p = z - pole and f(r) = (log r)/2 - 1/4, the field
// F = p f(|p|) satisfies div F = log|p|, so by the divergence theorem
//
//   integral_P log|z - pole| dA = sum_edges cross(A, B) * (L/2 - 1/4),
//
// where A, B are the edge endpoints relative to the pole (the outward flux of
// p through edge AB is the constant cross(A, B)) and
// L = integral_0^1 log|A + t(B-A)| dt has the elementary closed form below.

#include <cmath>
#include <complex>
#include <span>

#include "errors.hpp"
#include "lattice.hpp"

namespace torusgreen {

namespace detail {

inline double xlogx(double x)
{
    return x == 0.0 ? 0.0 : x * std::log(std::abs(x));
}

/// integral_0^1 ln(a t^2 + b t + c) dt for a > 0 and a t^2 + b t + c >= 0
/// on [0, 1].
inline double log_quadratic_integral(double a, double b, double c)
{
    const double disc = 4.0 * a * c - b * b;
    const double q1 = a + b + c; // value at t = 1
    // (t + b/2a) ln Q(t) - 2t + (sqrt(D)/a) atan((2at + b)/sqrt(D)), D > 0
    if (disc > 1e-14 * (4.0 * a * c + b * b)) {
        const double sq = std::sqrt(disc);
        const double half = b / (2.0 * a);
        const double t1 = (1.0 + half) * std::log(q1) - 2.0
                        + (sq / a) * std::atan((2.0 * a + b) / sq);
        const double t0 = (c > 0.0 ? half * std::log(c) : 0.0)
                        + (sq / a) * std::atan(b / sq);
        return t1 - t0;
    }
    // degenerate: Q(t) = a (t + r)^2 (pole on the edge's line)
    const double r = b / (2.0 * a);
    return std::log(a) + 2.0 * (xlogx(1.0 + r) - xlogx(r) - 1.0);
}

} // namespace detail

/// Mean of log|z - pole| over the polygon with the given vertices (convex,
/// consistently oriented, at least 3 of them).
inline double average_log_distance(std::span<const complex> polygon, complex pole)
{
    if (polygon.size() < 3)
        throw domain_error("average_log_distance: polygon needs at least 3 vertices");
    if (!is_finite(pole))
        throw domain_error("average_log_distance: pole must be finite");
    double integral = 0.0;
    double area2 = 0.0; // twice the signed area
    const std::size_t n = polygon.size();
    for (std::size_t k = 0; k < n; ++k) {
        const complex a = polygon[k] - pole;
        const complex b = polygon[(k + 1) % n] - pole;
        const double cross = a.real() * b.imag() - a.imag() * b.real();
        area2 += cross;
        if (cross == 0.0)
            continue;
        const complex d = b - a;
        const double qa = std::norm(d);
        double edge_mean; // integral_0^1 log|a + t d| dt
        if (qa < 1e-300) {
            edge_mean = 0.5 * std::log(std::norm(a));
        } else {
            const double qb = 2.0 * (a.real() * d.real() + a.imag() * d.imag());
            const double qc = std::norm(a);
            edge_mean = 0.5 * detail::log_quadratic_integral(qa, qb, qc);
        }
        integral += cross * (0.5 * edge_mean - 0.25);
    }
    if (area2 == 0.0)
        throw domain_error("average_log_distance: polygon has zero area");
    return 2.0 * integral / area2;
}

} // namespace torusgreen

#endif
