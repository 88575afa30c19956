#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/newton.hpp"

using namespace padic;

namespace {
CtxPtr ctx1() {
    auto m = Modulus::make(5, 2);
    return RingContext::create(5, 2, 2, DensePoly({1, 1, 1}, m));
}
} // namespace

TEST_CASE("lifting the conjugate root of phi: y0=[4,4] -> [24,24]") {
    CtxPtr c = ctx1();
    UnramElement y0 = element_from_coeffs(c, {4, 4});
    UnramElement root = lift_root(scalar_problem(c, c->phi(), y0));
    CHECK(root == element_from_coeffs(c, {24, 24}));
}

TEST_CASE("linear polynomial X - c is its own fixed point") {
    CtxPtr c = ctx1();
    UnramElement cc = element_from_coeffs(c, {13, 8});
    NewtonProblem prob{{neg(cc), one_element(c)}, cc};
    CHECK(lift_root(prob) == cc);
}

TEST_CASE("X^2 - 1 over (5,1,2): y0 = 4 lifts to 24") {
    auto m = Modulus::make(5, 2);
    CtxPtr c = RingContext::create(5, 1, 2, DensePoly::x(m));
    UnramElement y0 = element_from_coeffs(c, {4});
    UnramElement root = lift_root(scalar_problem(c, DensePoly({24, 0, 1}, m), y0));
    CHECK(root == element_from_coeffs(c, {24}));
}

TEST_CASE("precondition violations are rejected") {
    CtxPtr c = ctx1();
    auto m = c->modulus();
    // f(y0) != 0 mod p
    CHECK_THROWS_AS(lift_root(scalar_problem(c, DensePoly({1, 0, 1}, m),
                                             element_from_coeffs(c, {1}))),
                    Error);
    // double root: f = X^2, y0 = 0 has f'(y0) = 0
    CHECK_THROWS_AS(lift_root(scalar_problem(c, DensePoly({0, 0, 1}, m),
                                             zero_element(c))),
                    Error);
}

TEST_CASE("residual valuation doubles each iterate") {
    CtxPtr c = RingContext::create(5, 2, 8, DensePoly({1, 1, 1}, Modulus::make(5, 8)));
    // lift the conjugate root from precision 1 and watch the residuals
    UnramElement y0 = element_from_coeffs(c, {4, 4});
    NewtonProblem prob = scalar_problem(c, c->phi(), y0);
    auto iterates = lift_root_iterates(prob);
    unsigned expected = 1;
    for (const auto& y : iterates) {
        expected = std::min(2 * expected, 8u);
        UnramElement residual = eval_poly_at(prob.coeffs, y);
        CHECK(element_valuation(residual) >= expected);
    }
    CHECK(eval_poly_at(prob.coeffs, iterates.back()).is_zero());
}

TEST_CASE("eval_poly_at agrees between Horner and composition paths") {
    CtxPtr c = ctx1();
    auto m = c->modulus();
    DensePoly f({3, 1, 4, 1}, m); // scalar coefficients, degree > n triggers Horner
    UnramElement y = element_from_coeffs(c, {3, 7});
    NewtonProblem scal = scalar_problem(c, f, y);
    UnramElement direct = zero_element(c);
    for (int i = f.degree(); i >= 0; --i)
        direct = add(mul(direct, y),
                     element_from_coeffs(c, {f.coeff(i)}));
    CHECK(eval_poly_at(scal.coeffs, y) == direct);
}

TEST_CASE("big-ring coefficients work (non-scalar problem)") {
    CtxPtr c = ctx1();
    UnramElement a = element_from_coeffs(c, {3, 7});
    // f(Y) = Y^2 - a^2 has the simple root a (a is a unit)
    NewtonProblem prob{{neg(mul(a, a)), zero_element(c), one_element(c)},
                       truncate_element(a, 1).is_zero()
                           ? a
                           : element_from_coeffs(c, reduce_mod_p(a).coeff_vector())};
    UnramElement root = lift_root(prob);
    CHECK(mul(root, root) == mul(a, a));
}
