#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/arith.hpp"

using namespace padic;

namespace {
CtxPtr ctx1() {
    auto m = Modulus::make(5, 2);
    return RingContext::create(5, 2, 2, DensePoly({1, 1, 1}, m));
}
UnramElement E(const CtxPtr& c, std::vector<mpz_class> v) { return element_from_coeffs(c, v); }
} // namespace

TEST_CASE("add worked value [3,7] + [24,24] = [2,6]") {
    CtxPtr c = ctx1();
    CHECK(add(E(c, {3, 7}), E(c, {24, 24})) == E(c, {2, 6}));
    UnramElement a = E(c, {13, 8});
    CHECK(add(a, zero_element(c)) == a);
    CHECK(sub(a, a).is_zero());
    CHECK(add(a, neg(a)).is_zero());
}

TEST_CASE("mul worked values: x*x and x*x^2") {
    CtxPtr c = ctx1();
    UnramElement x = generator(c);
    CHECK(mul(x, x) == E(c, {24, 24}));
    CHECK(mul(x, E(c, {24, 24})) == one_element(c)); // x^3 = 1
    UnramElement a = E(c, {3, 7});
    CHECK(mul(one_element(c), a) == a);
}

TEST_CASE("inv worked values") {
    CtxPtr c = ctx1();
    CHECK(inv(generator(c)) == E(c, {24, 24})); // 1/x = x^2
    CHECK(inv(one_element(c)) == one_element(c));
    try {
        inv(E(c, {5, 10}));
        FAIL("expected NonUnit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnit);
    }
}

TEST_CASE("inv is a two-sided inverse on random units") {
    CtxPtr c = RingContext::create(7, 3, 4,
                                   DensePoly({2, 6, 0, 1}, Modulus::make(7, 4)));
    for (std::uint64_t s = 0; s < 40; ++s) {
        UnramElement a = random_element(c, s);
        if (element_valuation(a) != 0) continue;
        CHECK(mul(a, inv(a)) == one_element(c));
    }
}

TEST_CASE("element valuation") {
    CtxPtr c = ctx1();
    CHECK(element_valuation(E(c, {3, 7})) == 0);
    CHECK(element_valuation(E(c, {5, 10})) == 1);
    CHECK(element_valuation(zero_element(c)) == 2);
}

TEST_CASE("reduce_mod_p worked value [24,24] -> [4,4]") {
    CtxPtr c = ctx1();
    UnramElement r = reduce_mod_p(E(c, {24, 24}));
    CHECK(r.context()->precision() == 1);
    CHECK(r.coeff_vector() == std::vector<mpz_class>({4, 4}));
    CHECK(reduce_mod_p(zero_element(c)).is_zero());
}

TEST_CASE("reduce_mod_p is a ring homomorphism") {
    CtxPtr c = ctx1();
    for (std::uint64_t s = 0; s < 25; ++s) {
        UnramElement a = random_element(c, s), b = random_element(c, s + 500);
        CHECK(reduce_mod_p(mul(a, b)) == mul(reduce_mod_p(a), reduce_mod_p(b)));
        CHECK(reduce_mod_p(add(a, b)) == add(reduce_mod_p(a), reduce_mod_p(b)));
    }
}

TEST_CASE("scalar_mul distributes") {
    CtxPtr c = ctx1();
    ResidueInt s(7, c->modulus());
    UnramElement a = E(c, {3, 7}), b = E(c, {24, 2});
    CHECK(scalar_mul(add(a, b), s) == add(scalar_mul(a, s), scalar_mul(b, s)));
}

TEST_CASE("truncate and promote round-trip") {
    CtxPtr c = RingContext::create(5, 2, 4, DensePoly({1, 1, 1}, Modulus::make(5, 4)));
    UnramElement a = random_element(c, 3);
    UnramElement t = truncate_element(a, 2);
    CHECK(t.context()->precision() == 2);
    UnramElement back = promote_element(t, c);
    // low digits survive the round-trip
    CHECK(truncate_element(back, 2) == t);
}

TEST_CASE("elt_pow basics") {
    CtxPtr c = ctx1();
    UnramElement x = generator(c);
    CHECK(elt_pow(x, 0) == one_element(c));
    CHECK(elt_pow(x, 3) == one_element(c));
    CHECK(elt_pow(x, 25) == x); // x^24 = 1
}
