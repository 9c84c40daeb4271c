#ifndef TORUSGREEN_REPORT_HPP
#define TORUSGREEN_REPORT_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace torusgreen {

/// One evaluation record inside a verification report: which input was
/// checked and the residual it produced.
struct report_detail {
    std::string input;
    double residual;
};

struct verification_report {
    std::string check_name;
    std::size_t samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::vector<report_detail> details;
};

/// Builds a report from its details; max_residual, samples and passed are
/// derived, so passed == (max_residual <= tolerance) holds by construction.
/// A NaN residual propagates into max_residual and fails the check.
inline verification_report make_report(std::string name, double tolerance,
                                       std::vector<report_detail> details)
{
    verification_report r;
    r.check_name = std::move(name);
    r.tolerance = tolerance;
    r.details = std::move(details);
    r.samples = r.details.size();
    double worst = 0.0;
    for (const report_detail& d : r.details) {
        if (d.residual > worst || std::isnan(d.residual))
            worst = d.residual;
    }
    r.max_residual = worst;
    r.passed = worst <= tolerance;
    return r;
}

} // namespace torusgreen

#endif
