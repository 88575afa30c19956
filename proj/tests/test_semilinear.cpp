#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/semilinear.hpp"

#include "padic/frobenius.hpp"

using namespace padic;

namespace {
CtxPtr ctx1() {
    auto m = Modulus::make(5, 2);
    return RingContext::create(5, 2, 2, DensePoly({1, 1, 1}, m));
}
UnramElement E(const CtxPtr& c, std::vector<mpz_class> v) { return element_from_coeffs(c, v); }
} // namespace

TEST_CASE("worked instance alpha=1, beta=5, gamma=[1,21] solves to x") {
    CtxPtr c = ctx1();
    UnramElement x = generator(c);
    UnramElement alpha = one_element(c);
    UnramElement beta = E(c, {5});
    UnramElement gamma = E(c, {1, 21});
    // sanity: gamma = -(sigma(x) + 5x)
    CHECK(add(add(frob_element(x, 1), mul(beta, x)), gamma).is_zero());
    CHECK(solve_artin_schreier(alpha, beta, gamma) == x);
}

TEST_CASE("beta=0: the solution of sigma(X) = c is the constant c") {
    CtxPtr c = ctx1();
    UnramElement cc = E(c, {13});
    CHECK(solve_artin_schreier(one_element(c), zero_element(c), neg(cc)) == cc);
}

TEST_CASE("doubling state for the worked instance: A2 = 0, B2 = x") {
    CtxPtr c = ctx1();
    // sigma(X) = aX + b with a = -beta/alpha = -5, b = -gamma/alpha
    SemiLinearMap m1{E(c, {20}), neg(E(c, {1, 21})), 1};
    SemiLinearMap m2 = compose(m1, m1);
    CHECK(m2.k == 2);
    CHECK(m2.A.is_zero());
    CHECK(m2.B == generator(c));
}

TEST_CASE("solutions satisfy the equation on random contractive instances") {
    for (unsigned long p : {2ul, 7ul}) {
        CtxPtr c = find_irreducible_context(p, 3, 3, 5 * p);
        for (std::uint64_t s = 0; s < 15; ++s) {
            UnramElement alpha = add(random_element(c, s),
                                     one_element(c)); // try to keep it a unit
            if (element_valuation(alpha) != 0) continue;
            UnramElement beta =
                scalar_mul(random_element(c, s + 70), ResidueInt(p, c->modulus()));
            UnramElement gamma = random_element(c, s + 140);
            UnramElement X = solve_artin_schreier(alpha, beta, gamma);
            UnramElement lhs =
                add(add(mul(alpha, frob_element(X, 1)), mul(beta, X)), gamma);
            CHECK(lhs.is_zero());
        }
    }
}

TEST_CASE("preconditions: alpha must be a unit, beta must be divisible by p") {
    CtxPtr c = ctx1();
    CHECK_THROWS_AS(solve_artin_schreier(E(c, {5}), zero_element(c), one_element(c)),
                    Error);
    CHECK_THROWS_AS(solve_artin_schreier(one_element(c), one_element(c), one_element(c)),
                    Error);
}

namespace {
FrobPolynomial teich_phi(const CtxPtr& c) {
    FrobPolynomial f;
    mpz_class p = c->p();
    f.f = [p](const UnramElement& y, const UnramElement& z) {
        return sub(elt_pow(y, p), z);
    };
    f.df_dy = [p](const UnramElement& y, const UnramElement&) {
        return scalar_mul(elt_pow(y, p - 1), ResidueInt(p, y.context()->modulus()));
    };
    f.df_dz = [](const UnramElement& y, const UnramElement&) {
        return neg(one_element(y.context()));
    };
    return f;
}
} // namespace

TEST_CASE("gen_newton_lift fixed points") {
    CtxPtr c = ctx1();
    // x^5 = sigma(x) exactly in this context, so x is already the solution
    CHECK(gen_newton_lift(teich_phi(c), generator(c), 0) == generator(c));

    // phi(Y,Z) = Y - Z is solved by any constant
    FrobPolynomial idf;
    idf.f = [](const UnramElement& y, const UnramElement& z) { return sub(y, z); };
    idf.df_dy = [](const UnramElement& y, const UnramElement&) {
        return one_element(y.context());
    };
    idf.df_dz = [](const UnramElement& y, const UnramElement&) {
        return neg(one_element(y.context()));
    };
    UnramElement cc = E(c, {13});
    CHECK(gen_newton_lift(idf, cc, 0) == cc);
}

TEST_CASE("gen_newton_lift on (5,1,2): x0=2 gives 7") {
    auto m = Modulus::make(5, 2);
    CtxPtr c = RingContext::create(5, 1, 2, DensePoly::x(m));
    UnramElement two = E(c, {2});
    CHECK(gen_newton_lift(teich_phi(c), two, 0) == E(c, {7}));
}

TEST_CASE("teichmuller worked values") {
    CtxPtr c = ctx1();
    CHECK(teichmuller_lift(generator(c)) == generator(c));
    CHECK(teichmuller_lift(zero_element(c)).is_zero());
    CHECK(teichmuller_lift(one_element(c)) == one_element(c));

    auto m = Modulus::make(5, 2);
    CtxPtr c1 = RingContext::create(5, 1, 2, DensePoly::x(m));
    CHECK(teichmuller_lift(E(c1, {2})) == E(c1, {7}));
}

TEST_CASE("teichmuller properties: T^{p^n} = T, T = a mod p, multiplicative") {
    CtxPtr c = find_irreducible_context(3, 2, 4, 99);
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), 3, 2);
    for (std::uint64_t s = 0; s < 15; ++s) {
        UnramElement a = random_element(c, s);
        UnramElement T = teichmuller_lift(a);
        CHECK(elt_pow(T, q) == T);
        CHECK(reduce_mod_p(T) == reduce_mod_p(a));
        UnramElement b = random_element(c, s + 300);
        if (element_valuation(a) == 0 && element_valuation(b) == 0)
            CHECK(teichmuller_lift(mul(a, b)) ==
                  mul(teichmuller_lift(a), teichmuller_lift(b)));
    }
}

TEST_CASE("gen_newton_lift residual valuation doubles per step") {
    CtxPtr c = RingContext::create(5, 2, 8, DensePoly({1, 1, 1}, Modulus::make(5, 8)));
    FrobPolynomial f = teich_phi(c);
    for (std::uint64_t s = 0; s < 5; ++s) {
        UnramElement a = random_element(c, s);
        UnramElement T = teichmuller_lift(a);
        // final residual is exactly zero at full precision
        CHECK(sub(elt_pow(T, 5), frob_element(T, 1)).is_zero());
        // intermediate precisions: truncating the solve gives a residual of
        // at least that valuation
        for (unsigned prec : {2u, 4u}) {
            UnramElement Tp = teichmuller_lift(truncate_element(a, prec));
            UnramElement res = sub(elt_pow(Tp, 5), frob_element(Tp, 1));
            CHECK(element_valuation(res) >= prec);
        }
    }
}
