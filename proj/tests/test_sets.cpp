#include "linform/json_io.hpp"
#include "linform/recognize.hpp"
#include "linform/sets.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace linform;

namespace {

std::vector<Int> ints(std::initializer_list<long> values)
{
    return {values.begin(), values.end()};
}

Int rep_element(const Representation& rep, long coeff)
{
    for (const auto& entry : rep.entries)
        if (entry.coeff == coeff)
            return entry.element;
    FAIL("coefficient not present");
    return Int(-1);
}

} // namespace

TEST_CASE("coefficient set of small chains")
{
    CHECK(build_coefficients(parse_chain_spec("lambda=2; blocks=2")).values == ints({1, 2}));
    CHECK(build_coefficients(parse_chain_spec("lambda=2; blocks=2,2,2")).values ==
          ints({1, 2, 16, 32}));
    CHECK(build_coefficients(parse_chain_spec("lambda=3; blocks=2")).values == ints({1, 3}));
}

TEST_CASE("coefficient sets keep their exponents and always contain 1")
{
    CoefficientTuple tuple = build_coefficients(parse_chain_spec("lambda=2; blocks=2,2,2"));
    REQUIRE(tuple.exponents.has_value());
    CHECK(*tuple.exponents == ints({0, 1, 4, 5}));
    CHECK(tuple.values.front() == 1);
}

TEST_CASE("coefficient validation")
{
    CHECK_THROWS_AS(make_coefficients({}), Error);
    CHECK_THROWS_AS(make_coefficients(ints({1, 2, 2})), Error);
    CHECK_THROWS_AS(make_coefficients(ints({0, 1})), Error);
    CHECK(make_coefficients(ints({1, 7})).values == ints({1, 7}));
}

TEST_CASE("element membership by digit positions")
{
    ParameterChain moser = parse_chain_spec("lambda=2; blocks=2; tail=inf");
    CHECK(element_membership(Int(5), moser));
    CHECK_FALSE(element_membership(Int(2), moser));
    CHECK(element_membership(Int(0), moser));
    CHECK(element_membership(Int(0), parse_chain_spec("lambda=3; blocks=2,2")));
}

TEST_CASE("element enumeration of small chains")
{
    CHECK(enumerate_elements(parse_chain_spec("lambda=2; blocks=2,2"), Int(16)) ==
          ints({0, 1, 4, 5}));
    CHECK(enumerate_elements(parse_chain_spec("lambda=2; blocks=2,2"), Int(1)) == ints({0}));

    // positions {0,2,8,10}: 16 values, the top two places at 2^8 and 2^10
    std::vector<Int> elements =
        enumerate_elements(parse_chain_spec("lambda=2; blocks=2,2,2,2"), Int(2048));
    std::vector<Int> expected = oracles::element_set(2, ints({0, 2, 8, 10}), Int(2048));
    CHECK(elements == expected);
    CHECK(elements.size() == 16);
    CHECK(elements ==
          ints({0, 1, 4, 5, 256, 257, 260, 261, 1024, 1025, 1028, 1029, 1280, 1281, 1284,
                1285}));
}

TEST_CASE("the first lambda values always belong to the element set")
{
    for (const char* spec : {"lambda=2; blocks=2; tail=inf", "lambda=3; blocks=3,2",
                             "lambda=5; blocks=2,2,2; tail=inf", "lambda=4; blocks=2,3"}) {
        CAPTURE(spec);
        ParameterChain chain = parse_chain_spec(spec);
        std::vector<Int> elements = enumerate_elements(chain, Int(chain.lambda));
        REQUIRE(elements.size() == chain.lambda);
        for (std::uint64_t d = 0; d < chain.lambda; ++d)
            CHECK(elements[d] == d);
    }
}

TEST_CASE("membership and enumeration agree")
{
    for (const char* spec :
         {"lambda=2; blocks=2; tail=inf", "lambda=2; blocks=2,2,2; tail=inf",
          "lambda=3; blocks=2,2", "lambda=2; blocks=2,3,2,2", "lambda=4; blocks=3; tail=inf"}) {
        CAPTURE(spec);
        ParameterChain chain = parse_chain_spec(spec);
        Int bound(300);
        std::vector<Int> elements = enumerate_elements(chain, bound);
        std::size_t hits = 0;
        for (Int x = 0; x < bound; ++x) {
            bool member = element_membership(x, chain);
            bool listed = std::binary_search(elements.begin(), elements.end(), x);
            CHECK(member == listed);
            hits += member;
        }
        CHECK(hits == elements.size());
    }
}

TEST_CASE("representation of small values in the base family")
{
    ParameterChain moser = parse_chain_spec("lambda=2; blocks=2; tail=inf");
    Representation rep = represent(Int(3), moser);
    CHECK(rep_element(rep, 1) == 1);
    CHECK(rep_element(rep, 2) == 1);
    CHECK(evaluate(rep) == 3);

    rep = represent(Int(6), moser);
    CHECK(rep_element(rep, 1) == 4);
    CHECK(rep_element(rep, 2) == 1);

    rep = represent(Int(0), moser);
    for (const auto& entry : rep.entries)
        CHECK(entry.element == 0);
    CHECK(evaluate(rep) == 0);
}

TEST_CASE("representation rejects values beyond a finite chain")
{
    ParameterChain chain = parse_chain_spec("lambda=2; blocks=2,2,2");
    CHECK(evaluate(represent(Int(255), chain)) == 255);
    try {
        represent(Int(256), chain);
        FAIL("expected OutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OutOfRange);
    }
}

TEST_CASE("evaluation sums coefficient element products")
{
    Representation rep;
    rep.lambda = 2;
    rep.entries = {{Int(1), Int(5), DigitVector::of(Int(5), 2)},
                   {Int(2), Int(4), DigitVector::of(Int(4), 2)},
                   {Int(16), Int(0), DigitVector::of(Int(0), 2)},
                   {Int(32), Int(1), DigitVector::of(Int(1), 2)}};
    CHECK(evaluate(rep) == 45);
}

TEST_CASE("representation round trip")
{
    for (const char* spec :
         {"lambda=2; blocks=2; tail=inf", "lambda=3; blocks=2; tail=inf",
          "lambda=2; blocks=2,2,2; tail=inf", "lambda=2; blocks=3,2,2; tail=inf",
          "lambda=5; blocks=2; tail=inf", "lambda=2; blocks=2,2", "lambda=2; blocks=2,2,2,2",
          "lambda=3; blocks=2,2", "lambda=2; blocks=2,3,2"}) {
        CAPTURE(spec);
        ParameterChain chain = parse_chain_spec(spec);
        Int limit(512);
        if (!chain.positions_infinite()) {
            Int span = 1;
            for (std::uint64_t b : chain.blocks)
                span *= b;
            limit = std::min(limit, pow_checked(Int(chain.lambda), span));
        }
        for (Int n = 0; n < limit; ++n) {
            Representation rep = represent(n, chain);
            CHECK(evaluate(rep) == n);
            for (const auto& entry : rep.entries) {
                CHECK(element_membership(entry.element, chain));
                CHECK(entry.digits.value(chain.lambda) == entry.element);
            }
        }
        // distinct inputs give distinct assignments on a spot sample
        Representation a = represent(limit - 2, chain);
        Representation b = represent(limit - 1, chain);
        bool differ = false;
        for (std::size_t i = 0; i < a.entries.size(); ++i)
            differ = differ || a.entries[i].element != b.entries[i].element;
        CHECK(differ);
    }
}

TEST_CASE("representation round trip on big values")
{
    ParameterChain chain = parse_chain_spec("lambda=7; blocks=3,2,2; tail=inf");
    Int n = parse_decimal("123456789123456789123456789123456789");
    Representation rep = represent(n, chain);
    CHECK(evaluate(rep) == n);
    for (const auto& entry : rep.entries)
        CHECK(element_membership(entry.element, chain));
}

TEST_CASE("element counts match the digit space of the truncated family")
{
    // |elements|^|coeffs| covers the digit span exactly: lambda^(V_{k-1} U_k)
    for (const char* spec : {"lambda=2; blocks=2,2,2", "lambda=3; blocks=2,2,2",
                             "lambda=2; blocks=2,3,2", "lambda=2; blocks=3,2,2"}) {
        CAPTURE(spec);
        ParameterChain chain = parse_chain_spec(spec);
        ParameterChain truncated = chain;
        truncated.blocks.pop_back();
        CoefficientTuple coeffs = build_coefficients(chain);

        Int v_product = 1;
        for (std::size_t i = 1; i < chain.blocks.size(); i += 2)
            v_product *= chain.blocks[i];
        Int u_product = 1;
        for (std::size_t i = 0; i < chain.blocks.size(); i += 2)
            u_product *= chain.blocks[i];

        Int span = 1;
        for (std::uint64_t b : chain.blocks)
            span *= b;
        CHECK(v_product * u_product == span);

        std::vector<Int> elements =
            enumerate_elements(truncated, pow_checked(Int(chain.lambda), span));
        CHECK(Int(static_cast<unsigned long>(elements.size())) ==
              pow_checked(Int(chain.lambda), v_product));
        CHECK(Int(static_cast<unsigned long>(coeffs.values.size())) == u_product);
    }
}

TEST_CASE("digit vectors store no zeros and rebuild their value")
{
    DigitVector digits = DigitVector::of(Int(45), 2);
    for (const auto& [position, digit] : digits.digits)
        CHECK(digit != 0);
    CHECK(digits.value(2) == 45);
    CHECK(DigitVector::of(Int(0), 3).digits.empty());
}

TEST_CASE("json forms use decimal strings and position-keyed digit objects")
{
    DigitVector digits = DigitVector::of(Int(11), 3); // 102 base 3
    CHECK(to_json(digits).dump() == R"({"0":2,"2":1})");

    Representation rep = represent(Int(3), parse_chain_spec("lambda=2; blocks=2; tail=inf"));
    CHECK(to_json(rep).dump() == R"({"1":"1","2":"1"})");

    RecognitionResult result = recognize({Int(1), Int(2)}, {Int(0), Int(1)}, Int(4));
    Json json = to_json(result);
    CHECK(json["verdict"] == "Match");
    CHECK(json["chain"] == "lambda=2; blocks=2; tail=inf");
    CHECK(json["confirmed_bound"] == "4");
    CHECK(json["reason"] == "");
}
