#pragma once

#include <stdexcept>
#include <string>

namespace green3 {

/// Failure categories surfaced through the C API as status codes.
enum class ErrorCode {
    InvalidArgument = 1,
    Configuration = 2,
    Singularity = 3,
    Range = 4,
    AccuracyRegime = 5,
    Resonance = 6,
    Precondition = 7,
    Evaluation = 8,
    Truncation = 9,
    Unsupported = 10,
    Io = 11,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace green3
