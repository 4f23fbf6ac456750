#include "common/error.hpp"

namespace green3 {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid argument";
        case ErrorCode::Configuration: return "configuration error";
        case ErrorCode::Singularity: return "singularity";
        case ErrorCode::Range: return "range error";
        case ErrorCode::AccuracyRegime: return "outside accuracy regime";
        case ErrorCode::Resonance: return "ansatz resonance";
        case ErrorCode::Precondition: return "precondition violated";
        case ErrorCode::Evaluation: return "evaluation error";
        case ErrorCode::Truncation: return "truncation error";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::Io: return "i/o error";
    }
    return "unknown error";
}

}  // namespace green3
