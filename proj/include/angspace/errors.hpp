#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace angspace {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    ZeroSetVector,
    ZeroVector,
    NotBracketed,
    MonotonicityViolated,
    NotNormable,
    DegenerateInput,
    UnboundedDirection,
    InternalInconsistency,
    NoViolationFound,
    NotStarShaped,
    Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the weight-spec and vector parsers; `position` is the 0-based
/// offset of the offending character in the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace angspace
