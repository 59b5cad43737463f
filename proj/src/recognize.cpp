#include "linform/recognize.hpp"

#include <algorithm>
#include <set>

namespace linform {

const char* verdict_name(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Match: return "Match";
    case Verdict::ConsistentPrefix: return "ConsistentPrefix";
    case Verdict::Mismatch: return "Mismatch";
    }
    return "Unknown";
}

Int recover_base(const std::vector<Int>& coeffs)
{
    make_coefficients(coeffs);
    if (coeffs.front() != 1)
        fail(Errc::NoUnit, "the smallest coefficient must be 1, got " +
                               to_decimal(coeffs.front()),
             to_decimal(coeffs.front()));
    if (coeffs.size() < 2)
        fail(Errc::TooSmall,
             "a single unit coefficient admits only the improper full element set");
    return coeffs[1];
}

std::vector<Int> extract_exponents(const std::vector<Int>& coeffs, const Int& base)
{
    if (base < 2)
        fail(Errc::InvalidArgument, "base must be at least 2");
    std::vector<Int> exponents;
    exponents.reserve(coeffs.size());
    for (const Int& coeff : coeffs) {
        Int rest = coeff;
        Int exponent = 0;
        while (rest > 1) {
            Int quotient, remainder;
            mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), rest.get_mpz_t(),
                        base.get_mpz_t());
            if (remainder != 0)
                fail(Errc::NotAPower,
                     to_decimal(coeff) + " is not a power of " + to_decimal(base),
                     to_decimal(coeff));
            rest = quotient;
            ++exponent;
        }
        if (rest != 1)
            fail(Errc::NotAPower, to_decimal(coeff) + " is not a power of " + to_decimal(base),
                 to_decimal(coeff));
        exponents.push_back(exponent);
    }
    return exponents;
}

std::vector<std::uint64_t> recover_blocks(const std::vector<Int>& exponents, bool allow_uk_one)
{
    if (exponents.empty() || exponents.front() != 0)
        fail(Errc::NotStructured, "the exponent set must contain 0");
    for (std::size_t i = 1; i < exponents.size(); ++i) {
        if (exponents[i] <= exponents[i - 1])
            fail(Errc::InvalidArgument, "exponents must be strictly increasing");
    }

    std::set<Int> pool(exponents.begin(), exponents.end());
    std::vector<std::uint64_t> blocks;
    Int weight = 1;        // U_i V_i of the level about to be read
    std::uint64_t size = 1; // product of the recovered u blocks

    while (true) {
        // The run 0, weight, 2*weight, ... present in the set fixes the next u.
        std::uint64_t u = 0;
        while (pool.count(Int(u) * weight))
            ++u;
        if (u == 0)
            fail(Errc::NotStructured, "missing element " + to_decimal(weight));
        if (size > exponents.size() / u)
            fail(Errc::NotStructured, "run at weight " + to_decimal(weight) +
                                          " overshoots the set size");
        size *= u;
        blocks.push_back(u);

        if (size == exponents.size()) {
            if (u < 2 && !(allow_uk_one && blocks.size() == 1))
                fail(Errc::NotStructured, "final block must be at least 2");
            break;
        }

        if (u < 2)
            fail(Errc::NotStructured, "block " + std::to_string(blocks.size()) +
                                          " is below 2 at a non-final level");

        // The smallest element outside the span so far must be u * weight * v.
        Int covered = Int(u) * weight;
        Int next = -1;
        for (const Int& e : exponents) {
            // Elements below u*weight are covered iff their digits fit the
            // recovered prefix; the first element >= u*weight starts the next level.
            if (e >= covered) {
                next = e;
                break;
            }
        }
        if (next < 0)
            fail(Errc::NotStructured, "set smaller than the recovered span");
        Int v_int;
        Int remainder;
        mpz_fdiv_qr(v_int.get_mpz_t(), remainder.get_mpz_t(), next.get_mpz_t(),
                    covered.get_mpz_t());
        if (remainder != 0)
            fail(Errc::NotStructured, to_decimal(next) + " is not a multiple of " +
                                          to_decimal(covered),
                 to_decimal(next));
        if (v_int < 2)
            fail(Errc::NotStructured, "gap ratio below 2 at " + to_decimal(next),
                 to_decimal(next));
        blocks.push_back(to_u64(v_int));
        weight = covered * v_int;
    }

    // The runs are necessary, not sufficient: rebuild and compare exactly.
    ParameterChain chain{2, blocks, Terminator::FiniteV};
    std::vector<Int> rebuilt = build_exponent_set(chain).elements;
    if (rebuilt != exponents)
        fail(Errc::NotStructured, "the set does not factor as a block structure");
    return blocks;
}

namespace {

RecognitionResult mismatch(std::string reason, std::optional<Int> offending,
                           Int confirmed_bound)
{
    RecognitionResult result;
    result.verdict = Verdict::Mismatch;
    result.reason = std::move(reason);
    result.offending = std::move(offending);
    result.confirmed_bound = std::move(confirmed_bound);
    return result;
}

bool is_structural_error(Errc code)
{
    switch (code) {
    case Errc::NoUnit:
    case Errc::TooSmall:
    case Errc::NotAPower:
    case Errc::NotStructured:
    case Errc::BadCoefficients:
    case Errc::EmptyCoefficients:
        return true;
    default:
        return false;
    }
}

} // namespace

RecognitionResult recognize(const std::vector<Int>& coeffs, const std::vector<Int>& a_prefix,
                            const Int& prefix_bound)
{
    for (std::size_t i = 0; i < a_prefix.size(); ++i) {
        if (a_prefix[i] < 0 || (i > 0 && a_prefix[i] <= a_prefix[i - 1]))
            fail(Errc::InvalidArgument, "the element prefix must be strictly increasing");
        if (a_prefix[i] >= prefix_bound)
            fail(Errc::InvalidArgument,
                 "element " + to_decimal(a_prefix[i]) + " lies beyond the certified bound");
    }
    if (a_prefix.empty() || a_prefix.front() != 0)
        return mismatch("0 must be the smallest element", Int(0), Int(0));

    ParameterChain chain;
    try {
        Int base = recover_base(coeffs);
        chain.lambda = to_u64(base);
        chain.blocks = recover_blocks(extract_exponents(coeffs, base));
        chain.terminator = Terminator::InfiniteV;
    } catch (const Error& e) {
        if (!is_structural_error(e.code()))
            throw;
        std::optional<Int> offending;
        if (e.offending())
            offending = Int(*e.offending());
        return mismatch(std::string(errc_name(e.code())) + ": " + e.what(),
                        std::move(offending), Int(0));
    }

    // The recovered chain must reproduce both inputs exactly on their ranges.
    CoefficientTuple rebuilt = build_coefficients(chain);
    if (rebuilt.values != coeffs)
        return mismatch("coefficients do not rebuild from the recovered chain",
                        std::nullopt, Int(0));

    std::vector<Int> expected = enumerate_elements(chain, prefix_bound);
    if (expected != a_prefix) {
        // Smallest disagreeing value: first difference of two sorted lists.
        Int bad = 0;
        std::size_t i = 0, j = 0;
        while (i < expected.size() && j < a_prefix.size() && expected[i] == a_prefix[j]) {
            ++i;
            ++j;
        }
        std::string reason;
        if (i < expected.size() && (j == a_prefix.size() || a_prefix[j] > expected[i])) {
            bad = expected[i];
            reason = to_decimal(bad) + " belongs to the structured family but is missing";
        } else {
            bad = a_prefix[j];
            reason = to_decimal(bad) + " does not belong to the structured family";
        }
        return mismatch(std::move(reason), bad, bad);
    }

    // One full period of the element structure decides the terminator.
    Int period_exp = 1;
    for (std::uint64_t b : chain.blocks)
        period_exp *= b;
    RecognitionResult result;
    result.chain = chain;
    result.confirmed_bound = prefix_bound;
    result.verdict = pow_at_most(Int(chain.lambda), period_exp, prefix_bound)
                         ? Verdict::Match
                         : Verdict::ConsistentPrefix;
    return result;
}

ForcedPrefix forced_elements(const std::vector<Int>& coeffs, std::size_t bound,
                             std::size_t budget)
{
    make_coefficients(coeffs);
    if (bound > budget)
        fail(Errc::BudgetExceeded, "bound " + std::to_string(bound) +
                                       " exceeds the budget of " + std::to_string(budget) +
                                       " positions");

    ForcedPrefix forced;
    forced.bound = bound;

    // Counts over the current element set; rebuilt whenever an element is
    // adopted.  Representations of n only involve elements <= n, so counts
    // below the cursor are final.
    std::vector<std::size_t> offsets_buffer;
    Counts counts(bound, 0);
    Counts scratch(bound, 0);
    auto recount = [&]() {
        std::fill(counts.begin(), counts.end(), std::uint8_t{0});
        if (bound == 0)
            return;
        counts[0] = 1;
        for (const Int& coeff : coeffs) {
            offsets_buffer.clear();
            for (const Int& a : forced.elements) {
                Int shifted = coeff * a;
                if (shifted >= Int(static_cast<unsigned long>(bound)))
                    break;
                offsets_buffer.push_back(static_cast<std::size_t>(shifted.get_ui()));
            }
            std::fill(scratch.begin(), scratch.end(), std::uint8_t{0});
            for (std::size_t offset : offsets_buffer) {
                for (std::size_t n = offset; n < bound; ++n) {
                    unsigned sum = unsigned(scratch[n]) + unsigned(counts[n - offset]);
                    scratch[n] = static_cast<std::uint8_t>(sum > 2 ? 2 : sum);
                }
            }
            counts.swap(scratch);
        }
    };

    for (std::size_t n = 0; n < bound; ++n) {
        unsigned count = counts[n];
        if (count == 0) {
            forced.elements.push_back(Int(static_cast<unsigned long>(n)));
            recount();
            // The only new representations of n use n itself, via the unit
            // coefficient; without one the count stays 0 for every n >= 1.
            if (counts[n] == 0) {
                forced.failure = ForcedPrefix::Failure::Uncovered;
                forced.bad_n = Int(static_cast<unsigned long>(n));
                return forced;
            }
            count = counts[n];
        }
        if (count >= 2) {
            forced.failure = ForcedPrefix::Failure::Collision;
            forced.bad_n = Int(static_cast<unsigned long>(n));
            forced.witnesses = enumerate_representations(
                coeffs, forced.elements, *forced.bad_n, 2);
            return forced;
        }
    }
    return forced;
}

SearchReport search_all(unsigned max_m, std::uint64_t max_coeff, std::size_t bound,
                        std::size_t budget)
{
    SearchReport report;

    // All strictly increasing tuples starting at 1, lexicographic order.
    std::vector<std::uint64_t> tuple{1};
    auto run_candidate = [&](const std::vector<std::uint64_t>& candidate) {
        ++report.candidates;
        std::vector<Int> coeffs(candidate.begin(), candidate.end());
        ForcedPrefix forced = forced_elements(coeffs, bound, budget);
        if (!forced.feasible())
            return;
        if (forced.elements.size() == bound)
            return; // the full range: only the improper everything-set survives
        RecognitionResult result =
            recognize(coeffs, forced.elements, Int(static_cast<unsigned long>(bound)));
        report.survivors.push_back({std::move(coeffs), std::move(forced), std::move(result)});
    };

    auto extend = [&](auto&& self) -> void {
        run_candidate(tuple);
        if (tuple.size() >= max_m)
            return;
        for (std::uint64_t next = tuple.back() + 1; next <= max_coeff; ++next) {
            tuple.push_back(next);
            self(self);
            tuple.pop_back();
        }
    };
    if (max_m >= 1 && max_coeff >= 1)
        extend(extend);
    return report;
}

} // namespace linform
