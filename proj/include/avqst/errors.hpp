#pragma once

#include <stdexcept>
#include <string>

namespace avqst {

// Bad arguments or broken type invariants detected at a call boundary.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested object exceeds the supported problem size (dimension cap 2^8).
class CapacityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Numerical failure: solver non-convergence, singular metric, invalid probability mass.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Every particle weight collapsed to zero; message names the offending time index.
class DegeneratePosteriorError : public NumericError {
public:
    using NumericError::NumericError;
};

// A tracker/pool/model pair was advanced through different observation sequences.
class SynchronizationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The predictor handed to the martingale assigned nonpositive probability to the
// observed outcome (or was singular at construction).
class PredictorContractError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Filesystem failure, surfaced with path context.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace avqst
