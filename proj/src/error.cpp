#include "sepcore/error.hpp"

namespace sepcore {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::NegativeEigenvalue: return "NegativeEigenvalue";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::InsufficientSamples: return "InsufficientSamples";
        case ErrorCode::SingularIterate: return "SingularIterate";
        case ErrorCode::SingularSample: return "SingularSample";
        case ErrorCode::IncompatibleParameters: return "IncompatibleParameters";
        case ErrorCode::ConfigMismatch: return "ConfigMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ReplicateFailure: return "ReplicateFailure";
    }
    return "Unknown";
}

}  // namespace sepcore
