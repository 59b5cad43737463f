#include "linform/sets.hpp"

#include <algorithm>
#include <map>

namespace linform {

namespace {

// Base-lambda digits of x as (position, digit), positions ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> digits_of(const Int& x,
                                                               std::uint64_t lambda)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> digits;
    Int rest = x;
    std::uint64_t position = 0;
    while (rest != 0) {
        Int quotient, digit;
        mpz_fdiv_qr_ui(quotient.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), lambda);
        if (digit != 0)
            digits.emplace_back(position, digit.get_ui());
        rest = quotient;
        ++position;
    }
    return digits;
}

Int pow_u64(std::uint64_t base, std::uint64_t exp)
{
    if (exp > kMaxExponentBits)
        fail(Errc::BudgetExceeded,
             "exponent " + std::to_string(exp) + " beyond the materialization limit");
    Int result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, exp);
    return result;
}

} // namespace

CoefficientTuple make_coefficients(std::vector<Int> values)
{
    if (values.empty())
        fail(Errc::EmptyCoefficients, "at least one coefficient is required");
    if (values.front() < 1)
        fail(Errc::BadCoefficients, "coefficients must be positive");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1])
            fail(Errc::BadCoefficients,
                 "coefficients must be strictly increasing; repeated or unsorted at " +
                     to_decimal(values[i]));
    }
    return CoefficientTuple{std::move(values), std::nullopt, std::nullopt};
}

DigitVector DigitVector::of(const Int& value, std::uint64_t lambda)
{
    if (value < 0)
        fail(Errc::InvalidArgument, "negative values have no digit form");
    return DigitVector{digits_of(value, lambda)};
}

Int DigitVector::value(std::uint64_t lambda) const
{
    Int sum = 0;
    for (const auto& [position, digit] : digits)
        sum += Int(digit) * pow_u64(lambda, position);
    return sum;
}

CoefficientTuple build_coefficients(const ParameterChain& chain)
{
    ExponentSet exponents = build_exponent_set(chain);
    CoefficientTuple tuple;
    tuple.lambda = chain.lambda;
    tuple.values.reserve(exponents.elements.size());
    for (const Int& s : exponents.elements)
        tuple.values.push_back(pow_checked(Int(chain.lambda), s));
    tuple.exponents = std::move(exponents.elements);
    return tuple;
}

bool element_membership(const DigitVector& digits, const ParameterChain& chain)
{
    auto system = detail::position_system(chain.position_blocks(), chain.positions_infinite());
    for (const auto& [position, digit] : digits.digits) {
        if (digit >= chain.lambda)
            return false;
        if (!detail::position_contains(system, Int(position)))
            return false;
    }
    return true;
}

bool element_membership(const Int& x, const ParameterChain& chain)
{
    if (x < 0)
        return false;
    return element_membership(DigitVector{digits_of(x, chain.lambda)}, chain);
}

std::vector<Int> enumerate_elements(const ParameterChain& chain, const Int& bound)
{
    std::vector<Int> out;
    if (bound <= 0)
        return out;

    // Digit positions that can appear below the bound.
    std::uint64_t max_position = 0;
    {
        Int power = chain.lambda;
        while (power < bound) {
            ++max_position;
            power *= chain.lambda;
        }
    }
    auto system = detail::position_system(chain.position_blocks(), chain.positions_infinite());
    std::vector<Int> positions = detail::positions_below(system, Int(max_position) + 1);

    std::vector<Int> places;
    places.reserve(positions.size());
    for (const Int& p : positions)
        places.push_back(pow_u64(chain.lambda, to_u64(p)));

    // Odometer over the usable positions, little-endian; sparse descending
    // position sets make lexicographic order equal numeric order, so values
    // come out ascending and the loop can stop at the bound.
    std::vector<std::uint64_t> digits(places.size(), 0);
    Int value = 0;
    while (true) {
        if (value >= bound)
            break;
        if (out.size() >= kMaxMaterialized)
            fail(Errc::BudgetExceeded, "element enumeration spans more than 2^26 values");
        out.push_back(value);
        std::size_t h = 0;
        for (; h < places.size(); ++h) {
            ++digits[h];
            value += places[h];
            if (digits[h] < chain.lambda)
                break;
            value -= Int(chain.lambda) * places[h];
            digits[h] = 0;
        }
        if (h == places.size())
            break; // wrapped around: every combination emitted
    }
    return out;
}

Representation represent(const Int& n, const ParameterChain& chain)
{
    if (n < 0)
        fail(Errc::OutOfRange, "only nonnegative integers are representable");

    Int span = 1; // product of all blocks: the digit span of the finite system
    for (std::uint64_t b : chain.blocks)
        span *= b;
    bool infinite = chain.positions_infinite();

    ExponentSet exponents = build_exponent_set(chain);
    std::map<Int, Int> element_for; // exponent s -> accumulated element value
    for (const Int& s : exponents.elements)
        element_for[s] = 0;

    for (const auto& [position, digit] : digits_of(n, chain.lambda)) {
        Int p(position);
        Int super = 0;
        if (infinite) {
            super = p / span;
            p %= span;
        } else if (p >= span) {
            fail(Errc::OutOfRange, "value needs digit position " + to_decimal(p) +
                                       " but the chain only spans " + to_decimal(span));
        }
        auto [s, t] = decompose_exponent(p, chain);
        t += super * span;
        element_for.at(s) += Int(digit) * pow_u64(chain.lambda, to_u64(t));
    }

    Representation rep;
    rep.lambda = chain.lambda;
    rep.entries.reserve(element_for.size());
    for (const Int& s : exponents.elements) {
        const Int& element = element_for.at(s);
        rep.entries.push_back({pow_checked(Int(chain.lambda), s), element,
                               DigitVector::of(element, chain.lambda)});
    }
    return rep;
}

Int evaluate(const Representation& rep)
{
    Int sum = 0;
    for (const auto& entry : rep.entries)
        sum += entry.coeff * entry.element;
    return sum;
}

} // namespace linform
