#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

enum class ErrorCode {
    MalformedInput,
    NotRegular,
    SelfLoop,
    AsymmetricEdge,
    DuplicateEdge,
    VertexOutOfRange,
    InfeasibleParameters,
    GenerationFailed,
    DimensionMismatch,
    BadLength,
    BadEpsilon,
    NotConnectedComponent,
    OutOfRange,
    Unreachable,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace qwalk
