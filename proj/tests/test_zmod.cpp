#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/zmod.hpp"

using namespace padic;

namespace {
ModulusPtr m52() { return Modulus::make(5, 2); }
ResidueInt r(long v) { return ResidueInt(v, m52()); }
} // namespace

TEST_CASE("modulus caches p^N and validates p") {
    auto m = m52();
    CHECK(m->pn() == 25);
    CHECK(m->truncated(1)->pn() == 5);
    CHECK_THROWS_AS(Modulus::make(4, 2), Error);
    CHECK_THROWS_AS(Modulus::make(1, 2), Error);
    CHECK(Modulus::make(mpz_class("2147483647"), 1)->pn() == mpz_class("2147483647"));
}

TEST_CASE("zadd worked value 7 + 20 = 2 mod 25") {
    CHECK(zadd(r(7), r(20)).value() == 2);
}

TEST_CASE("additive identity and inverse") {
    for (long v : {0L, 1L, 7L, 24L}) {
        CHECK(zadd(r(0), r(v)) == r(v));
        CHECK(zadd(r(v), zneg(r(v))).is_zero());
    }
}

TEST_CASE("zmul worked value 7 * 8 = 6 mod 25") {
    CHECK(zmul(r(7), r(8)).value() == 6);
}

TEST_CASE("multiplicative identity and nilpotence of p") {
    CHECK(zmul(r(1), r(17)) == r(17));
    CHECK(zmul(r(5), r(5)).is_zero());
}

TEST_CASE("zinv worked value inverse of 7 is 18 mod 25") {
    CHECK(zinv(r(7)).value() == 18);
    CHECK(zmul(r(7), zinv(r(7))).value() == 1);
}

TEST_CASE("inverse of one is one") {
    CHECK(zinv(r(1)).value() == 1);
}

TEST_CASE("inverse of a non-unit reports the valuation") {
    try {
        zinv(r(5));
        FAIL("expected NonUnit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnit);
        CHECK(e.valuation() == 1);
    }
}

TEST_CASE("newton inverse agrees with extended gcd inverse") {
    auto m = Modulus::make(7, 6);
    for (long v = 1; v < 200; ++v) {
        if (v % 7 == 0) continue;
        CHECK(inverse_newton(v, *m) == inverse(v, *m));
    }
}

TEST_CASE("valuation worked values") {
    CHECK(zval(r(10)) == 1);
    CHECK(zval(r(7)) == 0);
    CHECK(zval(r(0)) == 2); // capped at N
}

TEST_CASE("precision reduction") {
    CHECK(zreduce(r(24), 1).value() == 4);
    CHECK(zreduce(r(13), 2) == r(13));
    CHECK(zreduce(r(25), 1).is_zero());
}

TEST_CASE("canonical wraps negatives") {
    auto m = m52();
    CHECK(canonical(-1, *m) == 24);
    CHECK(canonical(26, *m) == 1);
}
