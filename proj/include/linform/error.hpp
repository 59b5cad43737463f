#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace linform {

// Every failure mode carries one of these codes so callers (CLI, bindings,
// tests) can branch without parsing messages.
enum class Errc {
    InvalidBase,
    InvalidBlock,
    BadAlternation,
    OutOfRange,
    BoundRequired,
    EmptyCoefficients,
    MissingZero,
    BadCoefficients,
    NotACollision,
    BudgetExceeded,
    NoUnit,
    TooSmall,
    NotAPower,
    NotStructured,
    ParseError,
    InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message))
        , code_(code)
    {
    }

    Error(Errc code, std::string message, std::string offending)
        : std::runtime_error(std::move(message))
        , code_(code)
        , offending_(std::move(offending))
    {
    }

    Errc code() const { return code_; }

    // Decimal form of the value that triggered the failure, when one exists
    // (e.g. the coefficient that is not a pure power of the base).
    const std::optional<std::string>& offending() const { return offending_; }

private:
    Errc code_;
    std::optional<std::string> offending_;
};

[[noreturn]] inline void fail(Errc code, std::string message)
{
    throw Error(code, std::move(message));
}

[[noreturn]] inline void fail(Errc code, std::string message, std::string offending)
{
    throw Error(code, std::move(message), std::move(offending));
}

} // namespace linform
