#pragma once

#include <stdexcept>
#include <string>

namespace ldhull {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iteration cap reached without convergence or a divergence classification.
struct NoConvergence : Error {
    using Error::Error;
};

/// 1D conjugate objective still increasing at the bracket cap.
struct Unbounded : Error {
    using Error::Error;
};

/// Envelope construction saw no finite values.
struct EmptyDomain : Error {
    using Error::Error;
};

/// Queried point is not an extremal atom of the support hull.
struct NotExtremalAtom : Error {
    using Error::Error;
};

/// Requested tilt target has an infinite rate.
struct NoFiniteRate : Error {
    using Error::Error;
};

/// Importance-sampling effective sample size collapsed (< 10).
struct DegenerateWeights : Error {
    using Error::Error;
};

/// Slope fit needs at least 3 nonzero cells.
struct InsufficientCells : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace ldhull
