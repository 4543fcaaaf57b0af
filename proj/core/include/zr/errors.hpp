#pragma once

#include <stdexcept>

namespace zr {

/// Evaluation requested exactly at a pole.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Argument outside the supported evaluation region.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// A factor or series hit a singular point (vanishing denominator,
/// gamma/sine pole).
struct SingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A truncated sum or quadrature failed to reach its accuracy target.
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent run configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zr
