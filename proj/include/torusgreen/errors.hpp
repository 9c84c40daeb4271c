#ifndef TORUSGREEN_ERRORS_HPP
#define TORUSGREEN_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace torusgreen {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside the mathematical domain (Im tau too small, non-finite
/// arguments, invalid configuration values, ...).
class domain_error : public error {
public:
    using error::error;
};

/// A truncated q-series or q-product failed to reach the requested term
/// tolerance within max_terms.
class convergence_error : public error {
public:
    using error::error;
};

/// Evaluation requested too close to a logarithmic singularity.
class pole_error : public error {
public:
    pole_error(const std::string& what, std::complex<double> location)
        : error(what), location_(location) {}

    /// The pole the evaluation point collided with.
    std::complex<double> location() const { return location_; }

private:
    std::complex<double> location_;
};

/// Unparsable text input (complex literals, ranges, numeric lists).
class parse_error : public error {
public:
    using error::error;
};

/// Filesystem failure while writing results.
class io_error : public error {
public:
    using error::error;
};

} // namespace torusgreen

#endif
