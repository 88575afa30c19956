#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/io.hpp"

using namespace padic;

TEST_CASE("round trip context and element documents") {
    std::string text = R"({"p":"5","n":2,"N":2,"phi":["1","1","1"],"value":["3","7"]})";
    ElementDocument doc = parse_document(text);
    UnramElement e = element_from_document(doc);
    CHECK(e.coeff_vector() == std::vector<mpz_class>({3, 7}));
    ElementDocument back = document_from_element(e);
    CHECK(parse_document(serialize_document(back)).value == back.value);
    CHECK(back.phi == doc.phi);
}

TEST_CASE("values are canonicalized on load") {
    // 27 = 2 mod 25; negative not allowed in canonical output but accepted input
    auto doc = parse_document(
        R"({"p":"5","n":2,"N":2,"phi":["1","1","1"],"value":["27","-1"]})");
    UnramElement e = element_from_document(doc);
    CHECK(e.coeff_vector() == std::vector<mpz_class>({2, 24}));
}

TEST_CASE("parse failures carry the Parse code") {
    auto expect_parse = [](const std::string& text) {
        try {
            parse_document(text);
            return false;
        } catch (const Error& e) {
            return e.code() == ErrorCode::Parse;
        }
    };
    CHECK(expect_parse("not json"));
    CHECK(expect_parse("[1,2]"));
    CHECK(expect_parse(R"({"p":"5","n":2,"N":2})"));
    CHECK(expect_parse(R"({"p":5,"n":2,"N":2,"phi":["1","1","1"]})"));
    CHECK(expect_parse(R"({"p":"5","n":2,"N":2,"phi":["1","x","1"]})"));
    CHECK(expect_parse(R"({"p":"5","n":-2,"N":2,"phi":["1","1","1"]})"));
    CHECK(expect_parse(R"({"p":"","n":2,"N":2,"phi":["1","1","1"]})"));
}

TEST_CASE("structural failures: phi length and value length") {
    auto doc = parse_document(R"({"p":"5","n":2,"N":2,"phi":["1","1"]})");
    CHECK_THROWS_AS(context_from_document(doc), Error);
    auto doc2 = parse_document(
        R"({"p":"5","n":2,"N":2,"phi":["1","1","1"],"value":["1","2","3"]})");
    CHECK_THROWS_AS(element_from_document(doc2), Error);
    auto doc3 = parse_document(R"({"p":"5","n":2,"N":2,"phi":["1","1","1"]})");
    CHECK_THROWS_AS(element_from_document(doc3), Error); // no value
}

TEST_CASE("bad ring data surfaces the math error codes") {
    auto doc = parse_document(R"({"p":"4","n":2,"N":2,"phi":["1","1","1"]})");
    try {
        context_from_document(doc);
        FAIL("expected NotPrime");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrime);
    }
}

TEST_CASE("big values serialize as decimal strings") {
    mpz_class p("2147483647");
    ElementDocument doc;
    doc.p = p;
    doc.n = 1;
    doc.N = 2;
    doc.phi = {p * p - 1, 1}; // X - 1 mod p^2... just some canonical values
    doc.phi[0] = canonical(doc.phi[0], *Modulus::make(p, 2));
    std::string text = serialize_document(doc);
    ElementDocument back = parse_document(text);
    CHECK(back.p == doc.p);
    CHECK(back.phi == doc.phi);
}

TEST_CASE("coefficient arrays serialize low-degree-first") {
    CHECK(serialize_coeff_array({12, 1, 1}) == R"(["12","1","1"])");
}
