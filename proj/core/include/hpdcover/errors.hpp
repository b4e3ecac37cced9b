#pragma once

#include <stdexcept>
#include <string>

namespace hpdcover {

// Invalid requests: bad arguments, unsupported specs, calls outside an
// operation's domain. The CLI reports these as usage errors (exit code 2).
struct InvalidRequest : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidProbability : InvalidRequest {
    using InvalidRequest::InvalidRequest;
};

struct UnsupportedSpec : InvalidRequest {
    using InvalidRequest::InvalidRequest;
};

struct OutOfRegion : InvalidRequest {
    using InvalidRequest::InvalidRequest;
};

struct NonLogconcaveFamily : InvalidRequest {
    using InvalidRequest::InvalidRequest;
};

// Numeric failures: a solver could not do its job. The CLI reports these
// as numeric errors (exit code 3).
struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BracketFailure : NumericFailure {
    using NumericFailure::NumericFailure;
};

struct RootNotBracketed : NumericFailure {
    using NumericFailure::NumericFailure;
};

struct DegenerateTail : NumericFailure {
    using NumericFailure::NumericFailure;
};

struct LimitDiverged : NumericFailure {
    using NumericFailure::NumericFailure;
};

struct NegativeDiscriminant : NumericFailure {
    using NumericFailure::NumericFailure;
};

}  // namespace hpdcover
