#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace linform {

// All set elements, products and bounds are exact nonnegative integers.
using Int = mpz_class;

// Largest exponent we will materialize as a power; beyond this the numbers
// themselves stop being useful and only exhaust memory.
inline constexpr unsigned long kMaxExponentBits = 1ul << 26;

// Ceiling on the number of set elements any enumeration will materialize.
inline constexpr std::size_t kMaxMaterialized = std::size_t{1} << 26;

// Default ceiling on the length of dense counting vectors.
inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 24;

// Parses a nonnegative decimal integer; throws ParseError on anything else.
Int parse_decimal(std::string_view text);

std::string to_decimal(const Int& value);

// base^exp with a guard against runaway exponents (BudgetExceeded).
Int pow_checked(const Int& base, const Int& exp);

// Decides base^exp <= bound without materializing the power.
bool pow_at_most(const Int& base, const Int& exp, const Int& bound);

// Conversions that refuse to truncate.
std::size_t to_index(const Int& value, std::size_t limit);
std::uint64_t to_u64(const Int& value);

} // namespace linform
