#ifndef TORUSGREEN_LATTICE_HPP
#define TORUSGREEN_LATTICE_HPP

#include <cmath>
#include <complex>
#include <utility>

#include "errors.hpp"

namespace torusgreen {

using complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Coordinates (a, b) of z in the lattice basis {1, tau}, i.e. z = a + b*tau.
/// Requires Im tau != 0 (callers construct tau through nome_from_tau, which
/// enforces Im tau > 0).
inline std::pair<double, double> lattice_coordinates(complex z, complex tau)
{
    const double b = z.imag() / tau.imag();
    const double a = z.real() - b * tau.real();
    return {a, b};
}

namespace detail {

inline complex from_lattice_coordinates(double a, double b, complex tau)
{
    // Rebuild so that Im(result) is exactly b * Im(tau).
    return {a + b * tau.real(), b * tau.imag()};
}

} // namespace detail

/// Result of reducing z modulo Z + tau*Z:
///   z = point + shift_1 * 1 + shift_tau * tau
/// with shift_1, shift_tau integer-valued doubles.
struct lattice_reduction {
    complex point;
    double shift_1;
    double shift_tau;
};

/// Representative with lattice coefficients in [0, 1)^2 (the canonical
/// fundamental-domain representative).
inline lattice_reduction reduce_to_fundamental_domain(complex z, complex tau)
{
    auto [a, b] = lattice_coordinates(z, tau);
    double m = std::floor(a);
    double n = std::floor(b);
    double ra = a - m;
    double rb = b - n;
    // a - floor(a) can round up to exactly 1 for tiny negative a
    if (ra >= 1.0) { ra -= 1.0; m += 1.0; }
    if (rb >= 1.0) { rb -= 1.0; n += 1.0; }
    return {detail::from_lattice_coordinates(ra, rb, tau), m, n};
}

/// Representative with lattice coefficients in [-1/2, 1/2)^2; the natural
/// representative for differences z - w (symmetric around 0).
inline lattice_reduction reduce_centered(complex z, complex tau)
{
    auto [a, b] = lattice_coordinates(z, tau);
    double m = std::floor(a + 0.5);
    double n = std::floor(b + 0.5);
    double ra = a - m;
    double rb = b - n;
    if (ra >= 0.5) { ra -= 1.0; m += 1.0; }
    if (rb >= 0.5) { rb -= 1.0; n += 1.0; }
    return {detail::from_lattice_coordinates(ra, rb, tau), m, n};
}

/// |centered representative of z - w|: the distance between z and w on the
/// torus C/(Z + tau*Z), as measured in the centered cell. Used throughout as
/// the pole-proximity gauge.
inline double torus_distance(complex z, complex w, complex tau)
{
    return std::abs(reduce_centered(z - w, tau).point);
}

} // namespace torusgreen

#endif
