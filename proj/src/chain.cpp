#include "linform/chain.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace linform {

namespace {

bool is_u_position(std::size_t index)
{
    return index % 2 == 0;
}

std::string block_name(std::size_t index)
{
    std::ostringstream out;
    out << (is_u_position(index) ? 'u' : 'v') << (index / 2 + 1);
    return out.str();
}

} // namespace

ParameterChain validate_chain(std::uint64_t lambda, std::vector<std::uint64_t> blocks,
                              Terminator terminator, bool allow_uk_one)
{
    std::vector<std::string> violations;
    std::optional<Errc> code;
    auto violation = [&](Errc c, std::string message) {
        if (!code)
            code = c;
        violations.push_back(std::move(message));
    };

    if (lambda < 2)
        violation(Errc::InvalidBase, "base must be at least 2, got " + std::to_string(lambda));
    if (blocks.empty())
        violation(Errc::BadAlternation, "at least one block u1 is required");
    if (terminator == Terminator::InfiniteV && !blocks.empty() && blocks.size() % 2 == 0)
        violation(Errc::BadAlternation,
                  "an infinite tail requires the listed blocks to end at u_k");

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        bool trailing_u = is_u_position(i) && i + 1 == blocks.size();
        std::uint64_t minimum = (trailing_u && allow_uk_one) ? 1 : 2;
        if (blocks[i] < minimum)
            violation(Errc::InvalidBlock, "block " + block_name(i) + " must be at least " +
                                              std::to_string(minimum) + ", got " +
                                              std::to_string(blocks[i]));
    }

    if (code) {
        std::string message;
        for (const auto& v : violations) {
            if (!message.empty())
                message += "; ";
            message += v;
        }
        fail(*code, message);
    }
    return ParameterChain{lambda, std::move(blocks), terminator};
}

ParameterChain parse_chain_spec(std::string_view text, bool allow_uk_one)
{
    std::string compact;
    compact.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact.push_back(c);
    }

    std::optional<std::uint64_t> lambda;
    std::vector<std::uint64_t> blocks;
    bool saw_blocks = false;
    Terminator terminator = Terminator::FiniteV;

    auto parse_u64 = [](std::string_view field, std::string_view what) {
        Int value = parse_decimal(field);
        if (!value.fits_ulong_p())
            fail(Errc::ParseError, std::string(what) + " too large: " + std::string(field));
        return static_cast<std::uint64_t>(value.get_ui());
    };

    std::size_t pos = 0;
    while (pos < compact.size()) {
        std::size_t end = compact.find(';', pos);
        if (end == std::string::npos)
            end = compact.size();
        std::string_view part(compact.data() + pos, end - pos);
        pos = end + 1;
        if (part.empty())
            continue;
        std::size_t eq = part.find('=');
        if (eq == std::string_view::npos)
            fail(Errc::ParseError, "expected key=value, got '" + std::string(part) + "'");
        std::string_view key = part.substr(0, eq);
        std::string_view value = part.substr(eq + 1);
        if (key == "lambda") {
            lambda = parse_u64(value, "lambda");
        } else if (key == "blocks") {
            saw_blocks = true;
            std::size_t p = 0;
            while (p <= value.size()) {
                std::size_t comma = value.find(',', p);
                if (comma == std::string_view::npos)
                    comma = value.size();
                blocks.push_back(parse_u64(value.substr(p, comma - p), "block"));
                p = comma + 1;
                if (p == value.size() + 1)
                    break;
            }
        } else if (key == "tail") {
            if (value == "inf")
                terminator = Terminator::InfiniteV;
            else if (value == "finite")
                terminator = Terminator::FiniteV;
            else
                fail(Errc::ParseError, "tail must be 'finite' or 'inf', got '" +
                                           std::string(value) + "'");
        } else {
            fail(Errc::ParseError, "unknown key '" + std::string(key) + "'");
        }
    }

    if (!lambda)
        fail(Errc::ParseError, "missing 'lambda='");
    if (!saw_blocks)
        fail(Errc::ParseError, "missing 'blocks='");
    return validate_chain(*lambda, std::move(blocks), terminator, allow_uk_one);
}

std::string to_spec_string(const ParameterChain& chain)
{
    std::ostringstream out;
    out << "lambda=" << chain.lambda << "; blocks=";
    for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
        if (i)
            out << ',';
        out << chain.blocks[i];
    }
    out << "; tail=" << (chain.terminator == Terminator::InfiniteV ? "inf" : "finite");
    return out.str();
}

PartialProducts partial_products(const ParameterChain& chain)
{
    PartialProducts products;
    Int u_acc = 1;
    Int v_acc = 1;
    for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
        if (is_u_position(i)) {
            u_acc *= chain.blocks[i];
            products.U.push_back(u_acc);
        } else {
            v_acc *= chain.blocks[i];
            products.V.push_back(v_acc);
        }
    }
    return products;
}

namespace {

// Weights of the exponent-set digits: digit h (bounded by u_{h+1}) sits at
// U_h V_h, the product of all earlier blocks at a u position times all earlier
// blocks at a v position, i.e. the prefix product of the alternating list up
// to that digit.
struct DigitSystem {
    std::vector<Int> weights;
    std::vector<std::uint64_t> bounds;
};

DigitSystem exponent_system(std::span<const std::uint64_t> blocks)
{
    DigitSystem system;
    Int prefix = 1;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (is_u_position(i)) {
            system.weights.push_back(prefix);
            system.bounds.push_back(blocks[i]);
        }
        prefix *= blocks[i];
    }
    return system;
}

// Sorted values of {sum d_h * weights[h] : 0 <= d_h < bounds[h]}.  Weights
// grow at least as fast as the running digit span, so counting an odometer in
// little-endian digit order emits values in increasing numeric order.
std::vector<Int> enumerate_digit_system(const DigitSystem& system)
{
    std::uint64_t total = 1;
    for (std::uint64_t b : system.bounds) {
        if (b != 0 && total > kMaxMaterialized / b)
            fail(Errc::BudgetExceeded, "digit system spans more than 2^26 values");
        total *= b;
    }
    std::vector<Int> out;
    out.reserve(total);
    std::vector<std::uint64_t> digits(system.bounds.size(), 0);
    Int value = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        out.push_back(value);
        for (std::size_t h = 0; h < digits.size(); ++h) {
            ++digits[h];
            value += system.weights[h];
            if (digits[h] < system.bounds[h])
                break;
            value -= Int(system.bounds[h]) * system.weights[h];
            digits[h] = 0;
        }
    }
    return out;
}

} // namespace

ExponentSet build_exponent_set(const ParameterChain& chain)
{
    return ExponentSet{enumerate_digit_system(exponent_system(chain.exponent_blocks()))};
}

namespace detail {

PositionSystem position_system(std::span<const std::uint64_t> blocks, bool infinite)
{
    PositionSystem system;
    system.infinite = infinite;
    Int prefix = 1;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        prefix *= blocks[i];
        if (is_u_position(i)) {
            // digit j_{i/2} has weight U_{i/2+1} V_{i/2}; its bound is the
            // following v block, or unbounded for the infinite tail
            system.weights.push_back(prefix);
            if (i + 1 < blocks.size())
                system.bounds.push_back(blocks[i + 1]);
            else
                system.bounds.push_back(0); // unbounded, infinite only
        }
    }
    if (infinite) {
        if (system.weights.empty())
            fail(Errc::BadAlternation, "an infinite position set needs a final u block");
        system.period = system.weights.back();
    }
    return system;
}

bool position_contains(const PositionSystem& system, const Int& position)
{
    Int rest = position;
    for (std::size_t h = system.weights.size(); h-- > 0;) {
        Int digit = rest / system.weights[h];
        bool top = h + 1 == system.weights.size();
        if (!(top && system.infinite) && digit >= Int(system.bounds[h]))
            return false;
        rest -= digit * system.weights[h];
    }
    return rest == 0;
}

std::vector<Int> positions_below(const PositionSystem& system, const Int& bound)
{
    std::vector<Int> out;
    if (bound <= 0)
        return out;
    if (!system.infinite) {
        DigitSystem finite{system.weights, system.bounds};
        for (const Int& t : enumerate_digit_system(finite)) {
            if (t >= bound)
                break;
            out.push_back(t);
        }
        return out;
    }
    // One super-period at a time: the finite block below the unbounded digit,
    // shifted by multiples of the period.
    DigitSystem finite{
        {system.weights.begin(), system.weights.end() - 1},
        {system.bounds.begin(), system.bounds.end() - 1},
    };
    std::vector<Int> base = enumerate_digit_system(finite);
    for (Int shift = 0; shift < bound; shift += system.period) {
        for (const Int& t : base) {
            Int value = shift + t;
            if (value >= bound)
                return out;
            if (out.size() >= kMaxMaterialized)
                fail(Errc::BudgetExceeded, "position set spans more than 2^26 values");
            out.push_back(value);
        }
    }
    return out;
}

std::vector<Int> all_positions(const PositionSystem& system)
{
    if (system.infinite)
        fail(Errc::BoundRequired, "an unbounded position set cannot be materialized");
    return enumerate_digit_system(DigitSystem{system.weights, system.bounds});
}

} // namespace detail

PositionSet build_position_set(const ParameterChain& chain, const std::optional<Int>& bound)
{
    if (chain.terminator == Terminator::FiniteV && chain.ends_at_u())
        fail(Errc::BadAlternation,
             "the position set needs a chain ending at v_k or an infinite tail");
    auto system = detail::position_system(chain.position_blocks(), chain.positions_infinite());
    PositionSet set;
    set.infinite = system.infinite;
    if (system.infinite) {
        if (!bound)
            fail(Errc::BoundRequired, "an infinite tail requires an explicit bound");
        set.truncated_at = *bound;
        set.elements = detail::positions_below(system, *bound);
    } else if (bound) {
        set.truncated_at = *bound;
        set.elements = detail::positions_below(system, *bound);
    } else {
        set.elements = detail::all_positions(system);
    }
    return set;
}

std::vector<std::uint64_t> mixed_radix_digits(const Int& m,
                                              std::span<const std::uint64_t> radices)
{
    if (m < 0)
        fail(Errc::OutOfRange, "value must be nonnegative");
    Int span = 1;
    for (std::uint64_t r : radices) {
        if (r < 1)
            fail(Errc::InvalidArgument, "radices must be at least 1");
        span *= r;
    }
    if (m >= span)
        fail(Errc::OutOfRange,
             "value " + to_decimal(m) + " is outside the digit span " + to_decimal(span));
    std::vector<std::uint64_t> digits;
    digits.reserve(radices.size());
    Int rest = m;
    for (std::uint64_t r : radices) {
        Int quotient, digit;
        mpz_fdiv_qr_ui(quotient.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), r);
        digits.push_back(digit.get_ui());
        rest = quotient;
    }
    return digits;
}

std::pair<Int, Int> decompose_exponent(const Int& m, const ParameterChain& chain)
{
    auto digits = mixed_radix_digits(m, chain.blocks);
    Int s = 0;
    Int t = 0;
    Int weight = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        (is_u_position(i) ? s : t) += Int(digits[i]) * weight;
        weight *= chain.blocks[i];
    }
    return {s, t};
}

} // namespace linform
