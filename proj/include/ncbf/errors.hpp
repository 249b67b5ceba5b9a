#pragma once

#include <stdexcept>
#include <string>

namespace ncbf {

// Exit-code categories used by the CLI: config errors map to 2, missing
// prerequisite artifacts to 3, numerical/domain failures to 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingArtifact : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CoincidentUsers : NumericalError {
    using NumericalError::NumericalError;
};

struct SingularConstraints : NumericalError {
    using NumericalError::NumericalError;
};

struct ZeroVector : NumericalError {
    using NumericalError::NumericalError;
};

struct NoRoot : NumericalError {
    using NumericalError::NumericalError;
};

struct EmptyGrid : NumericalError {
    using NumericalError::NumericalError;
};

struct OutOfCoverage : NumericalError {
    using NumericalError::NumericalError;
};

struct SamplingExhausted : NumericalError {
    using NumericalError::NumericalError;
};

struct ShapeMismatch : NumericalError {
    using NumericalError::NumericalError;
};

struct KMismatch : NumericalError {
    using NumericalError::NumericalError;
};

struct NonFinite : NumericalError {
    using NumericalError::NumericalError;
};

struct ZeroDesiredGain : NumericalError {
    using NumericalError::NumericalError;
};

struct FileFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ncbf
