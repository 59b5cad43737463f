#pragma once

#include "linform/chain.hpp"
#include "linform/integer.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace linform {

// Strictly increasing positive coefficients; when built from a chain the
// structured provenance (base and exponents) is kept alongside.
struct CoefficientTuple {
    std::vector<Int> values;
    std::optional<std::uint64_t> lambda;
    std::optional<std::vector<Int>> exponents;
};

// Validates a raw coefficient list: nonempty, strictly increasing, >= 1.
// Repeated coefficients are rejected.
CoefficientTuple make_coefficients(std::vector<Int> values);

// Sparse base-lambda digits, positions ascending, zero digits never stored.
struct DigitVector {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> digits; // position -> digit

    static DigitVector of(const Int& value, std::uint64_t lambda);
    Int value(std::uint64_t lambda) const;
    bool operator==(const DigitVector&) const = default;
};

// Assignment of one element to each coefficient, ordered by coefficient.
struct Representation {
    struct Entry {
        Int coeff;
        Int element;
        DigitVector digits;
    };
    std::uint64_t lambda = 2;
    std::vector<Entry> entries;
};

// Sorted powers lambda^s over the chain's exponent set; size U_k.
CoefficientTuple build_coefficients(const ParameterChain& chain);

// True iff every nonzero base-lambda digit of x sits on a position of the
// chain's position set.
bool element_membership(const Int& x, const ParameterChain& chain);
bool element_membership(const DigitVector& digits, const ParameterChain& chain);

// All elements of the chain's element set strictly below `bound`, ascending.
std::vector<Int> enumerate_elements(const ParameterChain& chain, const Int& bound);

// The unique assignment making n = sum(coeff * element).  Chains with a
// bounded position set only represent n below lambda^(span of the digit
// system); larger n raise OutOfRange.
Representation represent(const Int& n, const ParameterChain& chain);

Int evaluate(const Representation& rep);

} // namespace linform
