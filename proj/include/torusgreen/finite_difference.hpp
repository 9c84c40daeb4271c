#ifndef TORUSGREEN_FINITE_DIFFERENCE_HPP
#define TORUSGREEN_FINITE_DIFFERENCE_HPP

#include <complex>

#include "errors.hpp"
#include "lattice.hpp"

namespace torusgreen {

/// Five-point Laplacian stencil configuration.
struct fd_scheme {
    double step = 1e-3;
};

inline void validate(const fd_scheme& scheme)
{
    if (!(scheme.step >= 1e-6 && scheme.step <= 1e-1))
        throw domain_error("fd_scheme: step must lie in [1e-6, 1e-1]");
}

/// d^2 f / (dz dzbar) = (f_xx + f_yy)/4, approximated by the five-point
/// Laplacian. Differences are taken pairwise against the center value before
/// summing, which keeps the rounding floor near eps/step^2.
template <typename F>
double dzdzbar(F&& f, complex z, const fd_scheme& scheme = {})
{
    validate(scheme);
    if (!is_finite(z))
        throw domain_error("dzdzbar: z must be finite");
    const double h = scheme.step;
    const double f0 = f(z);
    const double sum = (f(z + complex(h, 0.0)) - f0) + (f(z - complex(h, 0.0)) - f0)
                     + (f(z + complex(0.0, h)) - f0) + (f(z - complex(0.0, h)) - f0);
    return sum / (4.0 * h * h);
}

} // namespace torusgreen

#endif
