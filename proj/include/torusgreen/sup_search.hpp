#ifndef TORUSGREEN_SUP_SEARCH_HPP
#define TORUSGREEN_SUP_SEARCH_HPP

// Deterministic grid search for s = sup_z g_0(z), the supremum of the
// Arakelov-Green function (translation invariance in w reduces the double
// sup over pairs to a single sup over z - w).
//
// A coarse cell-centered N x N grid in lattice coordinates locates the basin;
// a few shrinking window refinements polish it. Every refinement window
// includes its own center, so the reported value is non-decreasing in the
// number of rounds. The pole only sends values to -infinity, so it cannot
// win the max; by default no exclusion radius is applied around it.

#include <cmath>
#include <complex>
#include <limits>

#include "errors.hpp"
#include "lattice.hpp"
#include "potentials.hpp"
#include "theta.hpp"

namespace torusgreen {

struct sup_search_config {
    int coarse_grid = 256;
    int refinement_rounds = 3;
    int refinement_factor = 8;
    double pole_exclusion_radius = 0.0;
};

inline void validate(const sup_search_config& cfg)
{
    if (cfg.coarse_grid < 32)
        throw domain_error("sup_search_config: coarse_grid must be >= 32");
    if (cfg.refinement_rounds < 0)
        throw domain_error("sup_search_config: refinement_rounds must be >= 0");
    if (cfg.refinement_factor < 2)
        throw domain_error("sup_search_config: refinement_factor must be >= 2");
    if (!(cfg.pole_exclusion_radius >= 0.0) || !is_finite(cfg.pole_exclusion_radius))
        throw domain_error("sup_search_config: pole_exclusion_radius must be >= 0");
}

struct sup_green_result {
    double value;
    complex argmax; // fundamental-domain representative
};

inline sup_green_result sup_green(const torus& t, const sup_search_config& cfg = {},
                                  const series_control& ctrl = {})
{
    validate(cfg);
    const complex tau = t.modulus.tau;
    const double log_eta = std::log(std::abs(dedekind_eta(t.modulus, ctrl)));
    const double exclusion = std::max(cfg.pole_exclusion_radius, pole_guard_radius);

    // g_0 at the point with lattice coordinates (a, b); the reduction makes
    // out-of-window refinement samples land on their torus values, so no
    // clamping is needed anywhere.
    auto value_at = [&](double a, double b) -> double {
        const complex z = detail::from_lattice_coordinates(a, b, tau);
        const complex x = reduce_centered(z, tau).point;
        if (std::abs(x) < exclusion)
            return -std::numeric_limits<double>::infinity();
        return std::log(std::abs(theta1(x, t.modulus, ctrl))) - log_eta
             - pi * x.imag() * x.imag() / tau.imag();
    };

    double best = -std::numeric_limits<double>::infinity();
    double best_a = 0.5;
    double best_b = 0.5;
    const int n = cfg.coarse_grid;
    for (int i = 0; i < n; ++i) {
        const double a = (i + 0.5) / n;
        for (int j = 0; j < n; ++j) {
            const double b = (j + 0.5) / n;
            const double v = value_at(a, b);
            if (v > best) {
                best = v;
                best_a = a;
                best_b = b;
            }
        }
    }

    double width = 1.0 / n; // window half-width, covers the coarse cell twice over
    const int k = cfg.refinement_factor;
    for (int round = 0; round < cfg.refinement_rounds; ++round) {
        const double spacing = width / k;
        const double ca = best_a;
        const double cb = best_b;
        for (int di = -k; di <= k; ++di) {
            for (int dj = -k; dj <= k; ++dj) {
                const double a = ca + di * spacing;
                const double b = cb + dj * spacing;
                const double v = value_at(a, b);
                if (v > best) {
                    best = v;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        width = 2.0 * spacing;
    }

    const complex argmax =
        reduce_to_fundamental_domain(detail::from_lattice_coordinates(best_a, best_b, tau), tau).point;
    return {best, argmax};
}

} // namespace torusgreen

#endif
