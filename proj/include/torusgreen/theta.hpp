#ifndef TORUSGREEN_THETA_HPP
#define TORUSGREEN_THETA_HPP

// Jacobi theta_1 and Dedekind eta in the convention used throughout this
// library:
//
//   q = exp(i*pi*tau),  Im tau > 0            (note: NOT exp(2*pi*i*tau))
//
//   theta1(z; q) = 2 q^{1/4} sin(pi z)
//                  prod_{n>=1} (1 - q^{2n}) (1 - 2 cos(2 pi z) q^{2n} + q^{4n})
//
//   eta(tau) = q^{1/12} prod_{m>=1} (1 - q^{2m})
//
// so the zero set of theta1 is exactly the lattice Z + tau*Z and
//
//   theta1(z + 1)   = -theta1(z)
//   theta1(z + tau) = -q^{-1} exp(-2 pi i z) theta1(z).
//
// This matches the classical theta_1(pi z, q). Fractional powers of q take
// the principal branch; since q^{1/4} = (q^{1/12})^3 under the principal
// logarithm, the identity theta1'(0) = 2 pi eta(tau)^3 holds exactly for
// complex tau as well.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "errors.hpp"
#include "lattice.hpp"

namespace torusgreen {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Truncation policy shared by all q-products and q-series.
struct series_control {
    std::size_t max_terms = 200;
    double term_tolerance = 1e-16;
};

inline void validate(const series_control& ctrl)
{
    if (ctrl.max_terms < 1)
        throw domain_error("series_control: max_terms must be >= 1");
    if (!(ctrl.term_tolerance > 0.0) || !is_finite(ctrl.term_tolerance))
        throw domain_error("series_control: term_tolerance must be positive and finite");
}

/// Modulus tau packaged with its nome q = exp(i*pi*tau).
struct nome {
    complex tau;
    complex q;
};

/// Smallest accepted Im tau. Below this |q| is close enough to 1 that the
/// default truncation budgets are meaningless.
inline constexpr double min_im_tau = 0.05;

inline nome nome_from_tau(complex tau)
{
    if (!is_finite(tau))
        throw domain_error("nome_from_tau: tau must be finite");
    if (!(tau.imag() > 0.0))
        throw domain_error("nome_from_tau: Im(tau) must be positive");
    if (tau.imag() < min_im_tau)
        throw domain_error("nome_from_tau: Im(tau) < 0.05 is outside the supported domain");
    const complex q = std::exp(complex(0.0, pi) * tau);
    const double expected = std::exp(-pi * tau.imag());
    if (!(std::abs(std::abs(q) - expected) <= 1e-12 * expected))
        throw domain_error("nome_from_tau: |q| deviates from exp(-pi Im tau)");
    return {tau, q};
}

/// theta1 via the triple-product form. Truncation: stop once a product factor
/// is within term_tolerance of 1.
inline complex theta1(complex z, const nome& nm, const series_control& ctrl = {})
{
    validate(ctrl);
    if (!is_finite(z))
        throw domain_error("theta1: z must be finite");
    const complex q2 = nm.q * nm.q;
    const complex cos2z = std::cos(two_pi * z);
    complex qpow = 1.0;      // q^{2n}
    complex product = 1.0;
    for (std::size_t n = 1; n <= ctrl.max_terms; ++n) {
        qpow *= q2;
        const complex factor = (1.0 - qpow) * (1.0 - 2.0 * cos2z * qpow + qpow * qpow);
        product *= factor;
        if (std::abs(factor - 1.0) < ctrl.term_tolerance)
            return 2.0 * std::pow(nm.q, 0.25) * std::sin(pi * z) * product;
    }
    throw convergence_error("theta1: product factors did not settle within max_terms");
}

/// theta1 via the alternating sine series
///   2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi z).
/// Kept as an independent route to the same value; the two implementations
/// cross-check each other. q^{(n+1/2)^2} is accumulated as
/// q^{1/4} * q^{n(n+1)}, so its branch agrees with the product form exactly.
inline complex theta1_series(complex z, const nome& nm, const series_control& ctrl = {})
{
    validate(ctrl);
    if (!is_finite(z))
        throw domain_error("theta1_series: z must be finite");
    const complex q2 = nm.q * nm.q;
    const double log_abs_q = -pi * nm.tau.imag();
    const double abs_im_z = std::abs(z.imag());
    const double log_tol = std::log(ctrl.term_tolerance);
    complex term_q = std::pow(nm.q, 0.25); // q^{(n+1/2)^2}
    complex step = q2;                     // ratio q^{(n+3/2)^2 - (n+1/2)^2} = q^{2n+2}
    complex sum = 0.0;
    double sign = 1.0;
    for (std::size_t n = 0; n < ctrl.max_terms; ++n) {
        const double k = 2.0 * static_cast<double>(n) + 1.0;
        sum += sign * term_q * std::sin(k * pi * z);
        // bound for the next term, in logs to avoid overflow:
        // |q|^{(n+3/2)^2} e^{(2n+3) pi |Im z|}
        const double np = static_cast<double>(n) + 1.5;
        const double log_bound = np * np * log_abs_q + (k + 2.0) * pi * abs_im_z;
        if (log_bound < log_tol)
            return 2.0 * sum;
        term_q *= step;
        step *= q2;
        sign = -sign;
    }
    throw convergence_error("theta1_series: tail bound did not reach tolerance within max_terms");
}

/// theta1'(0) = 2 pi q^{1/4} prod_{n>=1} (1 - q^{2n})^3.
inline complex theta1_prime_at_zero(const nome& nm, const series_control& ctrl = {})
{
    validate(ctrl);
    const complex q2 = nm.q * nm.q;
    complex qpow = 1.0;
    complex product = 1.0;
    for (std::size_t n = 1; n <= ctrl.max_terms; ++n) {
        qpow *= q2;
        const complex base = 1.0 - qpow;
        const complex factor = base * base * base;
        product *= factor;
        if (std::abs(factor - 1.0) < ctrl.term_tolerance)
            return two_pi * std::pow(nm.q, 0.25) * product;
    }
    throw convergence_error("theta1_prime_at_zero: product factors did not settle within max_terms");
}

/// Dedekind eta, eta(tau) = q^{1/12} prod_{m>=1} (1 - q^{2m}).
inline complex dedekind_eta(const nome& nm, const series_control& ctrl = {})
{
    validate(ctrl);
    const complex q2 = nm.q * nm.q;
    complex qpow = 1.0;
    complex product = 1.0;
    for (std::size_t m = 1; m <= ctrl.max_terms; ++m) {
        qpow *= q2;
        const complex factor = 1.0 - qpow;
        product *= factor;
        if (std::abs(factor - 1.0) < ctrl.term_tolerance)
            return std::pow(nm.q, 1.0 / 12.0) * product;
    }
    throw convergence_error("dedekind_eta: product factors did not settle within max_terms");
}

inline complex dedekind_eta(complex tau, const series_control& ctrl = {})
{
    return dedekind_eta(nome_from_tau(tau), ctrl);
}

/// log|theta1(z; q)| for arbitrary z, evaluated without overflow: reduce z to
/// the centered cell, evaluate there, and add back the exact quasi-period
/// correction. From theta1(x + m + n*tau) = (-1)^{m+n} q^{-n^2} e^{-2 pi i n x}
/// theta1(x):
///   log|theta1(z)| = log|theta1(x)| + pi n^2 Im tau + 2 pi n Im x.
/// Returns -infinity when z lies on the lattice.
inline double log_abs_theta1(complex z, const nome& nm, const series_control& ctrl = {})
{
    const lattice_reduction red = reduce_centered(z, nm.tau);
    const double n = red.shift_tau;
    const complex value = theta1(red.point, nm, ctrl);
    return std::log(std::abs(value)) + pi * n * n * nm.tau.imag() + two_pi * n * red.point.imag();
}

} // namespace torusgreen

#endif
