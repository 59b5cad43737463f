#pragma once

#include "linform/chain.hpp"
#include "linform/integer.hpp"
#include "linform/repcount.hpp"
#include "linform/sets.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linform {

// Requires coeffs[0] = 1 and at least two coefficients; returns coeffs[1],
// the only possible base.
Int recover_base(const std::vector<Int>& coeffs);

// Exponents of the coefficients as powers of `base`; NotAPower(value) when a
// coefficient is not a pure power.
std::vector<Int> extract_exponents(const std::vector<Int>& coeffs, const Int& base);

// Greedy inversion of the exponent-set structure: u1 is the maximal run
// {0..u1-1}, the next element fixes v1, and so on; verifies the rebuilt set
// equals the input exactly.  NotStructured(reason) otherwise.
std::vector<std::uint64_t> recover_blocks(const std::vector<Int>& exponents,
                                          bool allow_uk_one = false);

enum class Verdict { Match, ConsistentPrefix, Mismatch };

const char* verdict_name(Verdict verdict);

struct RecognitionResult {
    Verdict verdict = Verdict::Mismatch;
    std::optional<ParameterChain> chain; // recovered family (Match/ConsistentPrefix)
    Int confirmed_bound;                 // inputs equal the family on [0, confirmed_bound)
    std::string reason;                  // failure reason, empty on Match
    std::optional<Int> offending;        // smallest disagreeing value on Mismatch
};

// Decides whether (coeffs, a_prefix) is a structured family, where a_prefix
// is certified to equal the element set on [0, prefix_bound).  Match needs
// the prefix to cover one full period of the recovered chain; shorter prefixes
// that agree everywhere give ConsistentPrefix.
RecognitionResult recognize(const std::vector<Int>& coeffs,
                            const std::vector<Int>& a_prefix, const Int& prefix_bound);

struct ForcedPrefix {
    enum class Failure { None, Uncovered, Collision };

    std::vector<Int> elements; // the uniquely forced elements below `bound`
    std::size_t bound = 0;
    Failure failure = Failure::None;
    std::optional<Int> bad_n;                // target certifying infeasibility
    std::vector<std::vector<Int>> witnesses; // two representations when Failure::Collision

    bool feasible() const { return failure == Failure::None; }
};

// Greedy derivation of the unique element set compatible with count = 1:
// processes n = 0, 1, ...; a target with count 0 is adopted as an element
// (the only new representation then uses the target itself); a target with
// count >= 2 certifies that no such set exists.
ForcedPrefix forced_elements(const std::vector<Int>& coeffs, std::size_t bound,
                             std::size_t budget = kDefaultBudget);

struct SearchEntry {
    std::vector<Int> coeffs;
    ForcedPrefix forced;
    RecognitionResult result;
};

struct SearchReport {
    std::uint64_t candidates = 0; // coefficient tuples examined
    std::vector<SearchEntry> survivors;
};

// Enumerates every strictly increasing coefficient tuple starting at 1 with
// at most max_m entries bounded by max_coeff, keeps the ones whose forced
// element set stays feasible and proper over [0, bound), and attaches the
// recognizer's verdict.  Survivors are ordered lexicographically.
SearchReport search_all(unsigned max_m, std::uint64_t max_coeff, std::size_t bound,
                        std::size_t budget = kDefaultBudget);

} // namespace linform
