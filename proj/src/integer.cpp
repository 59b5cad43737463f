#include "linform/integer.hpp"

#include "linform/error.hpp"

#include <cctype>

namespace linform {

Int parse_decimal(std::string_view text)
{
    if (text.empty())
        fail(Errc::ParseError, "empty integer literal");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(Errc::ParseError,
                 "not a nonnegative decimal integer: '" + std::string(text) + "'");
    }
    return Int(std::string(text), 10);
}

std::string to_decimal(const Int& value)
{
    return value.get_str();
}

Int pow_checked(const Int& base, const Int& exp)
{
    if (exp < 0)
        fail(Errc::InvalidArgument, "negative exponent");
    if (!exp.fits_ulong_p() || exp.get_ui() > kMaxExponentBits)
        fail(Errc::BudgetExceeded,
             "exponent " + to_decimal(exp) + " beyond the materialization limit");
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    return result;
}

bool pow_at_most(const Int& base, const Int& exp, const Int& bound)
{
    if (exp == 0)
        return Int(1) <= bound;
    if (base <= 1)
        return base <= bound;
    // Multiply up with early exit: at most log_base(bound) + 1 steps.
    Int acc = 1;
    for (Int i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > bound)
            return false;
    }
    return true;
}

std::size_t to_index(const Int& value, std::size_t limit)
{
    if (value < 0 || !value.fits_ulong_p() || value.get_ui() > limit)
        fail(Errc::BudgetExceeded,
             "value " + to_decimal(value) + " does not fit the configured budget");
    return static_cast<std::size_t>(value.get_ui());
}

std::uint64_t to_u64(const Int& value)
{
    if (value < 0 || !value.fits_ulong_p())
        fail(Errc::BudgetExceeded, "value " + to_decimal(value) + " exceeds 64 bits");
    return value.get_ui();
}

const char* errc_name(Errc code)
{
    switch (code) {
    case Errc::InvalidBase: return "InvalidBase";
    case Errc::InvalidBlock: return "InvalidBlock";
    case Errc::BadAlternation: return "BadAlternation";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::BoundRequired: return "BoundRequired";
    case Errc::EmptyCoefficients: return "EmptyCoefficients";
    case Errc::MissingZero: return "MissingZero";
    case Errc::BadCoefficients: return "BadCoefficients";
    case Errc::NotACollision: return "NotACollision";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NoUnit: return "NoUnit";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotAPower: return "NotAPower";
    case Errc::NotStructured: return "NotStructured";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace linform
