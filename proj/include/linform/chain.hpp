#pragma once

#include "linform/error.hpp"
#include "linform/integer.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linform {

enum class Terminator {
    FiniteV,   // blocks stand as listed; a chain ending at v_k has a finite element set
    InfiniteV, // the listed blocks end at u_k and an unbounded v_k follows
};

// Generator data (lambda; u1, v1, u2, v2, ...) for one structured family.
// Blocks alternate u, v, u, ... starting at u1.  The infinite tail is a
// terminator value, never a sentinel integer.
struct ParameterChain {
    std::uint64_t lambda = 2;
    std::vector<std::uint64_t> blocks;
    Terminator terminator = Terminator::FiniteV;

    bool ends_at_u() const { return blocks.size() % 2 == 1; }
    std::size_t u_count() const { return (blocks.size() + 1) / 2; }

    // Longest prefix ending at a u block: the generator of the exponent set.
    std::span<const std::uint64_t> exponent_blocks() const
    {
        std::size_t n = blocks.size();
        if (n == 0)
            return {};
        return {blocks.data(), n % 2 == 1 ? n : n - 1};
    }

    // Generator of the digit-position set: all blocks when the chain ends at
    // v_k or continues to infinity, otherwise the blocks minus the trailing u_k.
    std::span<const std::uint64_t> position_blocks() const
    {
        std::size_t n = blocks.size();
        if (terminator == Terminator::InfiniteV || n % 2 == 0)
            return {blocks.data(), n};
        return {blocks.data(), n - 1};
    }

    bool positions_infinite() const { return terminator == Terminator::InfiniteV; }

    bool operator==(const ParameterChain&) const = default;
};

// Exact prefix products U_i = u1...ui and V_i = v1...vi.
struct PartialProducts {
    std::vector<Int> U;
    std::vector<Int> V;
};

// Strictly sorted base-lambda exponents whose powers make up the coefficient set.
struct ExponentSet {
    std::vector<Int> elements;
};

// Strictly sorted digit positions on which elements of the set may be nonzero.
struct PositionSet {
    std::vector<Int> elements;
    bool infinite = false;             // true when truncated from an unbounded stream
    std::optional<Int> truncated_at;   // exclusive bound used for the truncation
};

// Checks lambda >= 2, block alternation and block lower bounds.  A trailing
// u_k = 1 is accepted only when allow_uk_one is set.  The error message lists
// every violated constraint.
ParameterChain validate_chain(std::uint64_t lambda, std::vector<std::uint64_t> blocks,
                              Terminator terminator, bool allow_uk_one = false);

// Text grammar: "lambda=<int>; blocks=<int>(,<int>)*; tail=<finite|inf>".
// Whitespace-insensitive, decimal integers only, tail defaults to finite.
ParameterChain parse_chain_spec(std::string_view text, bool allow_uk_one = false);

std::string to_spec_string(const ParameterChain& chain);

PartialProducts partial_products(const ParameterChain& chain);

// The set {i0 + i1*U1V1 + ... + i_{k-1}*U_{k-1}V_{k-1} : 0 <= i_h < u_{h+1}},
// sorted; size U_k.  Built from the chain's longest prefix ending at a u block.
ExponentSet build_exponent_set(const ParameterChain& chain);

// The set {j0*U1 + j1*U2V1 + ... : 0 <= j_h < v_{h+1}}, sorted.  Finite chains
// yield exactly V_k elements; infinite chains require an exclusive bound and
// yield every element below it.
PositionSet build_position_set(const ParameterChain& chain,
                               const std::optional<Int>& bound = std::nullopt);

// Least-significant-first digits d_i with 0 <= d_i < radices[i]; requires
// m < product(radices).
std::vector<std::uint64_t> mixed_radix_digits(const Int& m,
                                              std::span<const std::uint64_t> radices);

// Splits 0 <= m < product(blocks) into the unique pair (s, t) with s in the
// exponent set and t in the position set of the chain's prefix, by routing the
// mixed-radix digits of m at u positions to s and at v positions to t.
std::pair<Int, Int> decompose_exponent(const Int& m, const ParameterChain& chain);

namespace detail {

// Weights and digit bounds of the position system T over an explicit block
// list; `infinite` leaves the top digit unbounded.  The weight of digit h is
// U_{h+1}V_h, so consecutive weights grow faster than the digit bounds and
// digit extraction from the top is exact.
struct PositionSystem {
    std::vector<Int> weights;
    std::vector<std::uint64_t> bounds; // one per weight; last entry unused when infinite
    bool infinite = false;
    Int period;                        // weight of the unbounded digit (infinite only)
};

PositionSystem position_system(std::span<const std::uint64_t> blocks, bool infinite);

bool position_contains(const PositionSystem& system, const Int& position);

// All positions below `bound`, sorted ascending.
std::vector<Int> positions_below(const PositionSystem& system, const Int& bound);

// All positions of a finite system, sorted ascending.
std::vector<Int> all_positions(const PositionSystem& system);

} // namespace detail

} // namespace linform
