#pragma once

#include <stdexcept>
#include <string>

namespace vncore {

enum class ErrorCode {
    Malformed,
    InvalidArgument,
    NotWellDefined,
    ActionMismatch,
    NotDense,
    NoResolution,
    ClosureError,
    IntertwinerError,
    RetractError,
    CouplingError,
    IoError,
};

const char* to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the engine. The C API maps
/// `code()` onto its status enum.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

} // namespace vncore
