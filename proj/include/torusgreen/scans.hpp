#ifndef TORUSGREEN_SCANS_HPP
#define TORUSGREEN_SCANS_HPP

// Parameter scans tracking the ratio pi k / c^2:
//
//  - toward the puncture: c_{tau,u}(w) |w-u| -> 1, so the ratio vanishes
//    like pi |w-u|^2 / (2 Im tau) (checked via the normalized column);
//  - along the degenerating family tau = i t: c_{tau,u} -> pi / |sin(pi (w-u))|
//    termwise, the punctured ratio decays like 1/t and the compact-torus
//    ratio blows up like e^{pi t / 3} / (8 pi t).

#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "potentials.hpp"
#include "theta.hpp"

namespace torusgreen {

/// One measured point of the ratio pi k / c^2.
struct ratio_sample {
    complex tau;
    complex u;
    complex w;
    double k;
    double c;
    double ratio;
};

inline ratio_sample make_ratio_sample(complex tau, complex u, complex w, double k, double c)
{
    if (!(k > 0.0) || !is_finite(k))
        throw domain_error("ratio_sample: k must be positive and finite");
    if (!(c > 0.0) || !is_finite(c))
        throw domain_error("ratio_sample: c must be positive and finite");
    return {tau, u, w, k, c, pi * k / (c * c)};
}

struct puncture_scan_row {
    double radius;
    ratio_sample sample;
    double c_times_radius;   // -> 1 as radius -> 0
    double ratio_normalized; // ratio / (pi r^2 / (2 Im tau)), -> 1
};

/// Walks w = u + r * direction toward the puncture.
inline std::vector<puncture_scan_row>
asymptotic_scan_puncture(const punctured_torus& pt, complex direction,
                         const std::vector<double>& radii, const series_control& ctrl = {})
{
    if (!is_finite(direction) || std::abs(std::abs(direction) - 1.0) > 1e-12)
        throw domain_error("asymptotic_scan_puncture: direction must have unit modulus");
    if (radii.empty())
        throw domain_error("asymptotic_scan_puncture: radii must be non-empty");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || !is_finite(radii[i]))
            throw domain_error("asymptotic_scan_puncture: radii must be positive and finite");
        if (radii[i] < pole_guard_radius)
            throw pole_error("asymptotic_scan_puncture: radius reaches the pole guard", pt.puncture);
        if (i > 0 && !(radii[i] < radii[i - 1]))
            throw domain_error("asymptotic_scan_puncture: radii must be strictly decreasing");
    }
    const complex tau = pt.base.modulus.tau;
    const double k = bergman_density_punctured(pt);
    std::vector<puncture_scan_row> rows;
    rows.reserve(radii.size());
    for (const double r : radii) {
        const complex w = pt.puncture + r * direction;
        const double c = fundamental_metric(pt, w, ctrl);
        const ratio_sample sample = make_ratio_sample(tau, pt.puncture, w, k, c);
        const double scale = pi * r * r / (2.0 * tau.imag());
        rows.push_back({r, sample, c * r, sample.ratio / scale});
    }
    return rows;
}

struct degeneration_row {
    double im_tau;
    ratio_sample sample; // punctured-torus ratio at (u, w)
    double ratio_torus;  // compact-torus ratio at the same tau
    double c_limit;      // pi / |sin(pi (w-u))|, the Im tau -> inf limit of c
};

/// Evaluates the two ratios along tau = i t for increasing t.
inline std::vector<degeneration_row>
degeneration_scan(complex u, complex w, const std::vector<double>& im_tau_values,
                  const series_control& ctrl = {})
{
    if (!is_finite(u) || !is_finite(w))
        throw domain_error("degeneration_scan: u and w must be finite");
    if (im_tau_values.empty())
        throw domain_error("degeneration_scan: im_tau values must be non-empty");
    for (std::size_t i = 0; i < im_tau_values.size(); ++i) {
        if (!(im_tau_values[i] >= min_im_tau) || !is_finite(im_tau_values[i]))
            throw domain_error("degeneration_scan: every Im tau must be finite and >= 0.05");
        if (i > 0 && !(im_tau_values[i] > im_tau_values[i - 1]))
            throw domain_error("degeneration_scan: im_tau values must be strictly increasing");
    }
    std::vector<degeneration_row> rows;
    rows.reserve(im_tau_values.size());
    for (const double t : im_tau_values) {
        const torus tt = torus_from_tau(complex(0.0, t));
        const punctured_torus pt = make_punctured_torus(tt, u);
        const double k = bergman_density_punctured(pt);
        const double c = fundamental_metric(pt, w, ctrl); // pole_error if w = u mod lattice
        const ratio_sample sample = make_ratio_sample(tt.modulus.tau, pt.puncture, w, k, c);
        const complex d = reduce_centered(w - pt.puncture, tt.modulus.tau).point;
        const double c_limit = pi / std::abs(std::sin(pi * d));
        rows.push_back({t, sample, suita_ratio_torus(tt, ctrl), c_limit});
    }
    return rows;
}

} // namespace torusgreen

#endif
