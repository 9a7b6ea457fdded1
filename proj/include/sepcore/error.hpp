#pragma once

#include <stdexcept>
#include <string>

namespace sepcore {

enum class ErrorCode {
    DimensionMismatch,
    NotPositiveDefinite,
    NegativeEigenvalue,
    ConvergenceFailure,
    InsufficientSamples,
    SingularIterate,
    SingularSample,
    IncompatibleParameters,
    ConfigMismatch,
    InvalidArgument,
    ReplicateFailure,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sepcore
