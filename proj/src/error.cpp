#include "vncore/error.hpp"

namespace vncore {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::ActionMismatch: return "ActionMismatch";
    case ErrorCode::NotDense: return "NotDense";
    case ErrorCode::NoResolution: return "NoResolution";
    case ErrorCode::ClosureError: return "ClosureError";
    case ErrorCode::IntertwinerError: return "IntertwinerError";
    case ErrorCode::RetractError: return "RetractError";
    case ErrorCode::CouplingError: return "CouplingError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

void raise(ErrorCode code, const std::string& what)
{
    throw Error(code, std::string(to_string(code)) + ": " + what);
}

} // namespace vncore
