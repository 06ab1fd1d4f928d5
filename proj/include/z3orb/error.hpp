#pragma once

#include <stdexcept>
#include <string>

namespace z3orb {

enum class ErrorCode {
    InvalidLevel,
    IndexOutOfRange,
    Syntax,
    LevelMismatch,
    Parity,
    CapExceeded,
    Overflow,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can map it to a status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace z3orb
