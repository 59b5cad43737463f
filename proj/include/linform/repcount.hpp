#pragma once

#include "linform/chain.hpp"
#include "linform/integer.hpp"
#include "linform/sets.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace linform {

// Saturating per-target counters; one byte per target keeps full-range scans cheap.
using Counts = std::vector<std::uint8_t>;

// Number of tuples (a1,...,am) from `elements` with sum(coeff_i * a_i) = n,
// for every 0 <= n < bound, saturated at cap (2 <= cap <= 255).  Computed by
// iterated truncated convolution of the m indicator series.  `elements` must
// be strictly increasing and contain 0.
Counts count_range(const std::vector<Int>& coeffs, const std::vector<Int>& elements,
                   std::size_t bound, unsigned cap = 2,
                   std::size_t budget = kDefaultBudget);

// Exact count for a single target by exhaustive tuple enumeration; the
// independent reference for count_range.
std::uint64_t brute_force_count(const std::vector<Int>& coeffs,
                                const std::vector<Int>& elements, const Int& n);

// Exhaustive-enumeration counts for a whole range; reference path only.
std::vector<std::uint64_t> brute_force_counts(const std::vector<Int>& coeffs,
                                              const std::vector<Int>& elements,
                                              std::size_t bound);

// Up to `limit` distinct representations of n, in lexicographic order of the
// assignment tuples.
std::vector<std::vector<Int>> enumerate_representations(const std::vector<Int>& coeffs,
                                                        const std::vector<Int>& elements,
                                                        const Int& n, std::size_t limit);

struct CountReport {
    Int bound;                               // targets below this must have count 1
    std::size_t unique_checked = 0;          // length of the verified unique prefix
    bool all_unique = false;
    std::optional<Int> first_deviation;      // smallest n with an unexpected count
    unsigned first_deviation_count = 0;
    std::map<unsigned, std::uint64_t> histogram; // count value -> number of targets
    std::optional<std::pair<Int, Int>> zero_window;
    bool zero_window_ok = false;
    Int max_sum;                             // largest representable target
    bool complete = false;                   // every n >= bound provably has count 0
    std::vector<std::vector<Int>> witnesses; // >= 2 representations of first_deviation

    bool ok() const { return all_unique && zero_window_ok && complete; }
};

enum class VerifyCase {
    I,  // chain ends at u_k; elements truncated at v_{k-1}; bound lambda^(U_k V_{k-1})
    II, // chain ends at v_k; full element set; bound lambda^(U_k V_k)
};

// Exhaustively checks count = 1 below the case bound and count = 0 on the
// window [bound, lambda*bound), then closes the tail with the exact maximal
// representable sum.  Refuses bounds beyond the budget unless allow_partial,
// in which case the report covers a prefix and says so.
CountReport verify_unique_range(const ParameterChain& chain, VerifyCase mode,
                                std::size_t budget = kDefaultBudget,
                                bool allow_partial = false);

// Counts for an arbitrary coefficient/element pair over [0, bound), reported
// in the same shape (no zero window, no tail claim).
CountReport count_report(const std::vector<Int>& coeffs, const std::vector<Int>& elements,
                         std::size_t bound, unsigned cap = 2,
                         std::size_t budget = kDefaultBudget);

struct CollisionWitness {
    Int target;
    std::vector<Int> first;  // full assignment, one entry per coefficient
    std::vector<Int> second;
    std::vector<std::size_t> first_support;  // 1-based indices of nonzero entries
    std::vector<std::size_t> second_support;
};

// Completes two index-set/element selections into full assignments (zeros
// elsewhere) certifying count(target) >= 2.  Index sets are 1-based and must
// differ; the two weighted sums must agree; the chosen elements must be nonzero.
CollisionWitness collision_from_witness(const std::vector<Int>& coeffs,
                                        const std::vector<std::size_t>& first_indices,
                                        const std::vector<std::size_t>& second_indices,
                                        const std::vector<Int>& first_elements,
                                        const std::vector<Int>& second_elements);

// Smallest n < bound with at least two representations, with two explicit
// distinct assignments; absent when every count is at most 1.
std::optional<CollisionWitness> find_collision(const std::vector<Int>& coeffs,
                                               const std::vector<Int>& elements,
                                               std::size_t bound,
                                               std::size_t budget = kDefaultBudget);

} // namespace linform
