#include <z3orb/error.hpp>

namespace z3orb {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidLevel: return "invalid level";
    case ErrorCode::IndexOutOfRange: return "i out of range";
    case ErrorCode::Syntax: return "syntax error";
    case ErrorCode::LevelMismatch: return "level mismatch";
    case ErrorCode::Parity: return "parity violation";
    case ErrorCode::CapExceeded: return "cap exceeded";
    case ErrorCode::Overflow: return "arithmetic overflow";
    case ErrorCode::InvalidArgument: return "invalid argument";
    }
    return "unknown error";
}

} // namespace z3orb
