#include "linform/repcount.hpp"

#include <algorithm>

namespace linform {

namespace {

void check_coefficients(const std::vector<Int>& coeffs)
{
    if (coeffs.empty())
        fail(Errc::EmptyCoefficients, "at least one coefficient is required");
    if (coeffs.front() < 1)
        fail(Errc::BadCoefficients, "coefficients must be positive");
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        if (coeffs[i] <= coeffs[i - 1])
            fail(Errc::BadCoefficients,
                 "coefficients must be strictly increasing; repeated or unsorted at " +
                     to_decimal(coeffs[i]));
    }
}

void check_elements(const std::vector<Int>& elements)
{
    if (elements.empty() || elements.front() != 0)
        fail(Errc::MissingZero, "the element list must contain 0");
    for (std::size_t i = 1; i < elements.size(); ++i) {
        if (elements[i] <= elements[i - 1])
            fail(Errc::InvalidArgument, "elements must be strictly increasing");
    }
}

// Offsets coeff*a that land below `bound`, as machine indices.
std::vector<std::size_t> scaled_offsets(const Int& coeff, const std::vector<Int>& elements,
                                        std::size_t bound)
{
    std::vector<std::size_t> offsets;
    for (const Int& a : elements) {
        Int shifted = coeff * a;
        if (shifted >= Int(static_cast<unsigned long>(bound)))
            break; // elements ascend, so every later offset is out as well
        offsets.push_back(static_cast<std::size_t>(shifted.get_ui()));
    }
    return offsets;
}

// counts = counts (convolve) indicator(offsets), saturated at cap.
void convolve_step(const Counts& current, Counts& next,
                   const std::vector<std::size_t>& offsets, unsigned cap)
{
    std::fill(next.begin(), next.end(), std::uint8_t{0});
    const std::size_t n = current.size();
    for (std::size_t offset : offsets) {
        const std::uint8_t* src = current.data();
        std::uint8_t* dst = next.data() + offset;
        const std::size_t span = n - offset;
        for (std::size_t i = 0; i < span; ++i) {
            unsigned sum = unsigned(dst[i]) + unsigned(src[i]);
            dst[i] = static_cast<std::uint8_t>(sum > cap ? cap : sum);
        }
    }
}

Counts counts_for(const std::vector<Int>& coeffs, const std::vector<Int>& elements,
                  std::size_t bound, unsigned cap)
{
    Counts current(bound, 0);
    if (bound == 0)
        return current;
    current[0] = 1;
    Counts next(bound, 0);
    for (const Int& coeff : coeffs) {
        convolve_step(current, next, scaled_offsets(coeff, elements, bound), cap);
        current.swap(next);
    }
    return current;
}

} // namespace

Counts count_range(const std::vector<Int>& coeffs, const std::vector<Int>& elements,
                   std::size_t bound, unsigned cap, std::size_t budget)
{
    check_coefficients(coeffs);
    check_elements(elements);
    if (cap < 2 || cap > 255)
        fail(Errc::InvalidArgument, "cap must lie in [2, 255]");
    if (bound > budget)
        fail(Errc::BudgetExceeded, "bound " + std::to_string(bound) +
                                       " exceeds the budget of " + std::to_string(budget) +
                                       " positions");
    return counts_for(coeffs, elements, bound, cap);
}

std::uint64_t brute_force_count(const std::vector<Int>& coeffs,
                                const std::vector<Int>& elements, const Int& n)
{
    check_coefficients(coeffs);
    check_elements(elements);
    if (n < 0)
        return 0;
    std::uint64_t count = 0;
    // Depth-first over coefficient positions; partial sums only grow, so a
    // partial above the target cuts the branch.
    auto descend = [&](auto&& self, std::size_t i, const Int& partial) -> void {
        if (i == coeffs.size()) {
            if (partial == n)
                ++count;
            return;
        }
        for (const Int& a : elements) {
            Int sum = partial + coeffs[i] * a;
            if (sum > n)
                break;
            self(self, i + 1, sum);
        }
    };
    descend(descend, 0, Int(0));
    return count;
}

std::vector<std::uint64_t> brute_force_counts(const std::vector<Int>& coeffs,
                                              const std::vector<Int>& elements,
                                              std::size_t bound)
{
    check_coefficients(coeffs);
    check_elements(elements);
    std::vector<std::uint64_t> counts(bound, 0);
    Int limit(static_cast<unsigned long>(bound));
    auto descend = [&](auto&& self, std::size_t i, const Int& partial) -> void {
        if (partial >= limit)
            return;
        if (i == coeffs.size()) {
            ++counts[partial.get_ui()];
            return;
        }
        for (const Int& a : elements) {
            Int sum = partial + coeffs[i] * a;
            if (sum >= limit)
                break;
            self(self, i + 1, sum);
        }
    };
    if (bound > 0)
        descend(descend, 0, Int(0));
    return counts;
}

std::vector<std::vector<Int>> enumerate_representations(const std::vector<Int>& coeffs,
                                                        const std::vector<Int>& elements,
                                                        const Int& n, std::size_t limit)
{
    check_coefficients(coeffs);
    check_elements(elements);
    std::vector<std::vector<Int>> found;
    if (n < 0 || limit == 0)
        return found;

    // Largest sum the coefficients from position i onward can still reach.
    std::vector<Int> max_tail(coeffs.size() + 1, 0);
    for (std::size_t i = coeffs.size(); i-- > 0;)
        max_tail[i] = max_tail[i + 1] + coeffs[i] * elements.back();

    std::vector<Int> assignment(coeffs.size());
    auto descend = [&](auto&& self, std::size_t i, const Int& partial) -> bool {
        if (i == coeffs.size()) {
            if (partial == n) {
                found.push_back(assignment);
                return found.size() >= limit;
            }
            return false;
        }
        if (partial + max_tail[i] < n)
            return false;
        for (const Int& a : elements) {
            Int sum = partial + coeffs[i] * a;
            if (sum > n)
                break;
            assignment[i] = a;
            if (self(self, i + 1, sum))
                return true;
        }
        return false;
    };
    descend(descend, 0, Int(0));
    return found;
}

namespace {

std::vector<std::size_t> support_of(const std::vector<Int>& assignment)
{
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] != 0)
            support.push_back(i + 1);
    }
    return support;
}

CollisionWitness witness_from_assignments(const Int& target, std::vector<Int> first,
                                          std::vector<Int> second)
{
    CollisionWitness witness;
    witness.target = target;
    witness.first_support = support_of(first);
    witness.second_support = support_of(second);
    witness.first = std::move(first);
    witness.second = std::move(second);
    return witness;
}

// Shared scan: histogram over [0, expect_one_below), first deviation against
// the expectation (1 below the split, 0 at and above it).
void scan_counts(const Counts& counts, std::size_t expect_one_below, CountReport& report,
                 const std::vector<Int>& coeffs, const std::vector<Int>& elements)
{
    report.all_unique = true;
    for (std::size_t n = 0; n < counts.size(); ++n) {
        unsigned expected = n < expect_one_below ? 1u : 0u;
        if (n < expect_one_below)
            ++report.histogram[counts[n]];
        if (counts[n] != expected && !report.first_deviation) {
            report.first_deviation = Int(static_cast<unsigned long>(n));
            report.first_deviation_count = counts[n];
            if (n < expect_one_below)
                report.all_unique = false;
            if (counts[n] >= 2)
                report.witnesses =
                    enumerate_representations(coeffs, elements, *report.first_deviation, 2);
        }
        if (n < expect_one_below && counts[n] != 1)
            report.all_unique = false;
    }
    report.unique_checked = std::min(expect_one_below, counts.size());
}

} // namespace

CountReport verify_unique_range(const ParameterChain& chain, VerifyCase mode,
                                std::size_t budget, bool allow_partial)
{
    if (mode == VerifyCase::I && !chain.ends_at_u())
        fail(Errc::BadAlternation, "case i needs a chain whose blocks end at u_k");
    if (mode == VerifyCase::II &&
        (chain.ends_at_u() || chain.terminator == Terminator::InfiniteV))
        fail(Errc::BadAlternation, "case ii needs a finite chain ending at v_k");

    CoefficientTuple coeffs = build_coefficients(chain);

    Int span_exp = 1; // U_k V_{k-1} (case i) or U_k V_k (case ii)
    for (std::uint64_t b : chain.blocks)
        span_exp *= b;

    CountReport report;
    report.bound = pow_checked(Int(chain.lambda), span_exp);
    Int budget_int(static_cast<unsigned long>(budget));

    bool fits = report.bound <= budget_int;
    if (!fits && !allow_partial)
        fail(Errc::BudgetExceeded, "uniqueness bound " + std::to_string(chain.lambda) + "^" +
                                       to_decimal(span_exp) + " exceeds the budget of " +
                                       std::to_string(budget) + " positions");

    std::size_t unique_end = fits ? to_index(report.bound, budget) : budget;
    std::size_t check_end = unique_end;
    if (fits) {
        Int window_end = report.bound * Int(chain.lambda);
        check_end = window_end > budget_int ? budget : to_index(window_end, budget);
        report.zero_window = {report.bound, Int(static_cast<unsigned long>(check_end))};
    }

    std::vector<Int> elements;
    {
        // Every element is strictly below lambda^span, so enumerating up to the
        // bound captures the whole finite set.  A partial run only needs the
        // elements inside the scanned range.
        ParameterChain element_chain = chain;
        if (chain.ends_at_u())
            element_chain.blocks.pop_back();
        element_chain.terminator = Terminator::FiniteV;
        elements = enumerate_elements(
            element_chain, fits ? report.bound : Int(static_cast<unsigned long>(check_end)));
    }

    Counts counts = count_range(coeffs.values, elements, check_end, 2, budget);
    scan_counts(counts, unique_end, report, coeffs.values, elements);
    if (fits) {
        bool window_clean = true;
        for (std::size_t n = unique_end; n < check_end; ++n)
            window_clean = window_clean && counts[n] == 0;
        report.zero_window_ok = window_clean;
    }

    report.max_sum = 0;
    for (const Int& coeff : coeffs.values)
        report.max_sum += coeff * elements.back();
    report.complete = fits && report.all_unique && report.zero_window_ok &&
                      report.max_sum < Int(static_cast<unsigned long>(check_end));
    return report;
}

CountReport count_report(const std::vector<Int>& coeffs, const std::vector<Int>& elements,
                         std::size_t bound, unsigned cap, std::size_t budget)
{
    Counts counts = count_range(coeffs, elements, bound, cap, budget);
    CountReport report;
    report.bound = Int(static_cast<unsigned long>(bound));
    scan_counts(counts, bound, report, coeffs, elements);
    report.max_sum = 0;
    for (const Int& coeff : coeffs)
        report.max_sum += coeff * elements.back();
    report.complete = false; // no claim beyond the scanned range
    return report;
}

CollisionWitness collision_from_witness(const std::vector<Int>& coeffs,
                                        const std::vector<std::size_t>& first_indices,
                                        const std::vector<std::size_t>& second_indices,
                                        const std::vector<Int>& first_elements,
                                        const std::vector<Int>& second_elements)
{
    check_coefficients(coeffs);
    if (first_indices.size() != first_elements.size() ||
        second_indices.size() != second_elements.size())
        fail(Errc::InvalidArgument, "index sets and element lists must pair up");

    auto check_selection = [&](const std::vector<std::size_t>& indices,
                               const std::vector<Int>& elems) {
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (indices[i] < 1 || indices[i] > coeffs.size())
                fail(Errc::InvalidArgument,
                     "index " + std::to_string(indices[i]) + " outside 1.." +
                         std::to_string(coeffs.size()));
            if (i > 0 && indices[i] <= indices[i - 1])
                fail(Errc::InvalidArgument, "index sets must be strictly increasing");
            if (elems[i] == 0)
                fail(Errc::InvalidArgument, "selected elements must be nonzero");
            if (elems[i] < 0)
                fail(Errc::InvalidArgument, "selected elements must be nonnegative");
        }
    };
    check_selection(first_indices, first_elements);
    check_selection(second_indices, second_elements);

    if (first_indices == second_indices)
        fail(Errc::NotACollision, "the two index sets coincide");

    auto complete = [&](const std::vector<std::size_t>& indices,
                        const std::vector<Int>& elems) {
        std::vector<Int> assignment(coeffs.size(), Int(0));
        Int sum = 0;
        for (std::size_t i = 0; i < indices.size(); ++i) {
            assignment[indices[i] - 1] = elems[i];
            sum += coeffs[indices[i] - 1] * elems[i];
        }
        return std::pair{assignment, sum};
    };
    auto [first, first_sum] = complete(first_indices, first_elements);
    auto [second, second_sum] = complete(second_indices, second_elements);

    if (first_sum != second_sum)
        fail(Errc::NotACollision, "the two weighted sums differ: " + to_decimal(first_sum) +
                                      " vs " + to_decimal(second_sum));
    if (first == second)
        fail(Errc::NotACollision, "the two assignments coincide");
    return witness_from_assignments(first_sum, std::move(first), std::move(second));
}

std::optional<CollisionWitness> find_collision(const std::vector<Int>& coeffs,
                                               const std::vector<Int>& elements,
                                               std::size_t bound, std::size_t budget)
{
    Counts counts = count_range(coeffs, elements, bound, 2, budget);
    for (std::size_t n = 0; n < counts.size(); ++n) {
        if (counts[n] < 2)
            continue;
        Int target(static_cast<unsigned long>(n));
        auto reps = enumerate_representations(coeffs, elements, target, 16);
        // Prefer a pair with distinct supports; fall back to the first two.
        for (std::size_t i = 0; i < reps.size(); ++i) {
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                if (support_of(reps[i]) != support_of(reps[j]))
                    return witness_from_assignments(target, reps[i], reps[j]);
            }
        }
        return witness_from_assignments(target, reps.at(0), reps.at(1));
    }
    return std::nullopt;
}

} // namespace linform
