#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/charpoly.hpp"

#include "padic/arith.hpp"
#include "padic/frobenius.hpp"
#include "padic/oracle.hpp"

using namespace padic;

namespace {
CtxPtr ctx1() {
    auto m = Modulus::make(5, 2);
    return RingContext::create(5, 2, 2, DensePoly({1, 1, 1}, m));
}
UnramElement E(const CtxPtr& c, std::vector<mpz_class> v) { return element_from_coeffs(c, v); }
} // namespace

TEST_CASE("minimal polynomial of the generator is phi") {
    CtxPtr c = ctx1();
    CHECK(minimal_polynomial(generator(c)) == c->phi());
}

TEST_CASE("minimal polynomial of a constant is X - c") {
    CtxPtr c = ctx1();
    CHECK(minimal_polynomial(E(c, {13})) == DensePoly({12, 1}, c->modulus()));
}

TEST_CASE("minimal polynomial worked value [3,7] -> X^2 + X + 12") {
    CtxPtr c = ctx1();
    CHECK(minimal_polynomial(E(c, {3, 7})) == DensePoly({12, 1, 1}, c->modulus()));
}

TEST_CASE("projection and orbit paths agree") {
    CtxPtr c = ctx1();
    for (std::uint64_t s = 0; s < 30; ++s) {
        UnramElement a = random_element(c, s);
        CHECK(minimal_polynomial(a) == minimal_polynomial_orbit(a));
    }
}

TEST_CASE("minimal polynomial annihilates and has degree dividing n") {
    CtxPtr c = find_irreducible_context(3, 4, 3, 17);
    for (std::uint64_t s = 0; s < 20; ++s) {
        UnramElement a = random_element(c, s);
        DensePoly mp = minimal_polynomial(a);
        CHECK(mp.is_monic());
        CHECK(4 % mp.degree() == 0);
        // c(alpha) = 0
        UnramElement acc = zero_element(c);
        for (int i = mp.degree(); i >= 0; --i)
            acc = add(mul(acc, a), E(c, {mp.coeff(i)}));
        CHECK(acc.is_zero());
        // reduction compatibility: the minimal polynomial of the reduction
        // divides c mod p (equality whenever the degrees agree; the degree
        // can genuinely drop mod p, e.g. for 1 + p*x)
        oracle::NaiveRing naive(3, 4, 1, c->phi_bar().coeffs());
        DensePoly bar_mp(naive.minpoly_mod_p(naive.from(reduce_mod_p(a).coeff_vector())),
                         c->modulus_mod_p());
        CHECK(pdivrem_monic(mp.truncated(1), bar_mp).remainder.is_zero());
        if (bar_mp.degree() == mp.degree()) CHECK(mp.truncated(1) == bar_mp);
    }
}

TEST_CASE("trace worked values") {
    CtxPtr c = ctx1();
    CHECK(trace(E(c, {3, 7})).value() == 24);
    CHECK(trace(one_element(c)).value() == 2); // n mod p^N
    CHECK(trace(generator(c)).value() == 24);  // Tr(x) = -1
}

TEST_CASE("norm worked values") {
    CtxPtr c = ctx1();
    CHECK(norm(E(c, {3, 7})).value() == 12);
    CHECK(norm(one_element(c)).value() == 1);
}

TEST_CASE("norm_resultant worked values and agreement with norm") {
    CtxPtr c = ctx1();
    CHECK(norm_resultant(generator(c)).value() == 1);
    CHECK(norm_resultant(E(c, {7})).value() == 24); // 7^2 = 49
    CHECK(norm_resultant(E(c, {3, 7})).value() == 12);
    for (std::uint64_t s = 0; s < 30; ++s) {
        UnramElement a = random_element(c, s);
        CHECK(norm(a) == norm_resultant(a));
    }
}

TEST_CASE("trace is linear, equal to the conjugate sum; norm to the product") {
    CtxPtr c = find_irreducible_context(7, 3, 2, 23);
    for (std::uint64_t s = 0; s < 15; ++s) {
        UnramElement a = random_element(c, s), b = random_element(c, s + 800);
        CHECK(trace(add(a, b)) == zadd(trace(a), trace(b)));
        CHECK(norm(mul(a, b)) == zmul(norm(a), norm(b)));
        UnramElement sum = zero_element(c), prod = one_element(c);
        for (unsigned i = 0; i < 3; ++i) {
            sum = add(sum, frob_element(a, i));
            prod = mul(prod, frob_element(a, i));
        }
        CHECK(sum == E(c, {trace(a).value()}));
        CHECK(prod == E(c, {norm(a).value()}));
    }
}

TEST_CASE("teichmuller modulus worked values") {
    CtxPtr c = ctx1();
    CHECK(teichmuller_modulus(c) == c->phi()); // x^25 = x already

    auto m = Modulus::make(5, 2);
    CtxPtr c1 = RingContext::create(5, 1, 2, DensePoly({23, 1}, m)); // X - 2
    CHECK(teichmuller_modulus(c1) == DensePoly({18, 1}, m));         // X - 7
}

TEST_CASE("teichmuller modulus properties on a small grid") {
    for (unsigned long p : {2ul, 3ul}) {
        for (unsigned n : {2u, 3u}) {
            for (unsigned N : {2u, 4u}) {
                CtxPtr c = find_irreducible_context(p, n, N, p * 10 + n + N);
                DensePoly F = teichmuller_modulus(c);
                CHECK(F.is_monic());
                CHECK(F.degree() == static_cast<int>(n));
                CHECK(F.truncated(1) == c->phi_bar());
                CHECK(is_teichmuller_modulus(F, p, n, N));
            }
        }
    }
}
