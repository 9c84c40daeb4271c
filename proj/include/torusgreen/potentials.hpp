#ifndef TORUSGREEN_POTENTIALS_HPP
#define TORUSGREEN_POTENTIALS_HPP

// Explicit potential theory on the torus X_tau = C/(Z + tau*Z) and on the
// once-punctured torus X_tau \ {u}:
//
//   Arakelov-Green:   g_w(z) = log|theta1(z-w)/eta(tau)| - pi Im(z-w)^2 / Im tau
//                     (doubly periodic, symmetric, mean zero over the torus)
//
//   Evans-Selberg:    E_{u,w}(z) = log|theta1(z-w)| - log|theta1(z-u)|
//                     (pole at w, +infinity at the puncture u; exactly
//                      1-periodic, and E(z+tau) - E(z) = 2 pi Im(u-w))
//
//   Arakelov metric:      c_tau = 2 pi |eta(tau)|^2
//   Fundamental metric:   c_{tau,u}(w) = 2 pi |eta(tau)|^3 / |theta1(w-u)|
//   Bergman densities:    k = 1/(2 Im tau) on both the torus and the
//                         punctured torus (L^2 removability of a point)
//
// Both metrics arise as exp of the near-pole limit of the matching potential
// minus log|z-w|; the closed forms above are used directly and the limit
// consistency is covered by the verification checks.
//
// Pole-anchored differences (z-w, w-u) are reduced to the centered cell
// (coefficients in [-1/2, 1/2)^2), which keeps every quantity symmetric
// around its pole. Values of the lattice-invariant Green function are
// unaffected by the choice of representative.

#include <cmath>
#include <complex>

#include "errors.hpp"
#include "lattice.hpp"
#include "theta.hpp"

namespace torusgreen {

/// Complex torus C/(Z + tau*Z).
struct torus {
    nome modulus;
};

inline torus torus_from_tau(complex tau)
{
    return {nome_from_tau(tau)};
}

/// Torus with one marked puncture. The puncture is stored as its
/// fundamental-domain representative, which pins down the (otherwise
/// multivalued) Evans-Selberg potential.
struct punctured_torus {
    torus base;
    complex puncture;
};

inline punctured_torus make_punctured_torus(const torus& t, complex u)
{
    if (!is_finite(u))
        throw domain_error("make_punctured_torus: puncture must be finite");
    return {t, reduce_to_fundamental_domain(u, t.modulus.tau).point};
}

/// Evaluations closer than this to a log-singularity raise pole_error.
inline constexpr double pole_guard_radius = 1e-14;

/// Canonical representative a + b*tau with a, b in [0, 1).
inline complex reduce_to_fundamental_domain(complex z, const torus& t)
{
    if (!is_finite(z))
        throw domain_error("reduce_to_fundamental_domain: z must be finite");
    return reduce_to_fundamental_domain(z, t.modulus.tau).point;
}

/// Arakelov-Green function g_w(z).
inline double arakelov_green(const torus& t, complex z, complex w,
                             const series_control& ctrl = {})
{
    if (!is_finite(z) || !is_finite(w))
        throw domain_error("arakelov_green: z and w must be finite");
    const complex tau = t.modulus.tau;
    const complex x = reduce_centered(z - w, tau).point;
    if (std::abs(x) < pole_guard_radius)
        throw pole_error("arakelov_green: z coincides with the pole w (mod lattice)", w);
    const double log_theta = std::log(std::abs(theta1(x, t.modulus, ctrl)));
    const double log_eta = std::log(std::abs(dedekind_eta(t.modulus, ctrl)));
    return log_theta - log_eta - pi * x.imag() * x.imag() / tau.imag();
}

/// Arakelov metric density c_tau = 2 pi |eta(tau)|^2, the exp of the Robin
/// constant lim_{z->w} (g_w(z) - log|z-w|).
inline double arakelov_metric_torus(const torus& t, const series_control& ctrl = {})
{
    const double abs_eta = std::abs(dedekind_eta(t.modulus, ctrl));
    return two_pi * abs_eta * abs_eta;
}

/// Evans-Selberg potential E_{u,w}(z) on the punctured torus. Evaluated
/// verbatim (no reduction of z), so the stated quasi-periods hold exactly.
inline double evans_selberg(const punctured_torus& pt, complex w, complex z,
                            const series_control& ctrl = {})
{
    if (!is_finite(w) || !is_finite(z))
        throw domain_error("evans_selberg: w and z must be finite");
    const complex tau = pt.base.modulus.tau;
    if (torus_distance(w, pt.puncture, tau) < pole_guard_radius)
        throw domain_error("evans_selberg: pole w coincides with the puncture u");
    if (torus_distance(z, w, tau) < pole_guard_radius)
        throw pole_error("evans_selberg: z at the pole w (value -> -infinity)", w);
    if (torus_distance(z, pt.puncture, tau) < pole_guard_radius)
        throw pole_error("evans_selberg: z at the puncture u (value -> +infinity)", pt.puncture);
    return log_abs_theta1(z - w, pt.base.modulus, ctrl)
         - log_abs_theta1(z - pt.puncture, pt.base.modulus, ctrl);
}

/// Fundamental metric density on the punctured torus,
/// c_{tau,u}(w) = 2 pi |eta|^3 / |theta1(w-u)|, with w-u taken in the
/// centered cell. Behaves like 1/|w-u| near the puncture.
inline double fundamental_metric(const punctured_torus& pt, complex w,
                                 const series_control& ctrl = {})
{
    if (!is_finite(w))
        throw domain_error("fundamental_metric: w must be finite");
    const complex tau = pt.base.modulus.tau;
    const complex d = reduce_centered(w - pt.puncture, tau).point;
    if (std::abs(d) < pole_guard_radius)
        throw pole_error("fundamental_metric: w coincides with the puncture u", pt.puncture);
    const double abs_eta = std::abs(dedekind_eta(pt.base.modulus, ctrl));
    const double value = two_pi * abs_eta * abs_eta * abs_eta
                       / std::abs(theta1(d, pt.base.modulus, ctrl));
    if (!(value > 0.0) || !is_finite(value))
        throw domain_error("fundamental_metric: evaluation did not produce a positive finite value");
    return value;
}

/// Bergman kernel density of the torus, k = 1/(2 Im tau) in the |dw|^2
/// normalization.
inline double bergman_density_torus(const torus& t)
{
    return 1.0 / (2.0 * t.modulus.tau.imag());
}

/// Bergman kernel density of the punctured torus. A point is L^2-removable,
/// so the density equals the unpunctured one.
inline double bergman_density_punctured(const punctured_torus& pt)
{
    return bergman_density_torus(pt.base);
}

/// pi k / c^2 on the punctured torus at w.
inline double suita_ratio_punctured(const punctured_torus& pt, complex w,
                                    const series_control& ctrl = {})
{
    const double c = fundamental_metric(pt, w, ctrl);
    return pi * bergman_density_punctured(pt) / (c * c);
}

/// pi k / c^2 on the compact torus; equals 1/(8 pi Im tau |eta(tau)|^4).
inline double suita_ratio_torus(const torus& t, const series_control& ctrl = {})
{
    const double c = arakelov_metric_torus(t, ctrl);
    return pi * bergman_density_torus(t) / (c * c);
}

} // namespace torusgreen

#endif
