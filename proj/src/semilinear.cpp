#include "padic/semilinear.hpp"

#include "padic/frobenius.hpp"

namespace padic {

SemiLinearMap compose(const SemiLinearMap& first, const SemiLinearMap& second) {
    UnramElement sa = frob_element(first.A, second.k);
    UnramElement sb = frob_element(first.B, second.k);
    return {mul(sa, second.A), add(mul(sa, second.B), sb), first.k + second.k};
}

UnramElement solve_artin_schreier(const UnramElement& alpha, const UnramElement& beta,
                                  const UnramElement& gamma) {
    const CtxPtr& ctx = alpha.context();
    if (element_valuation(alpha) != 0)
        fail(ErrorCode::NonUnit, "alpha must be a unit", element_valuation(alpha));
    if (element_valuation(beta) == 0)
        fail(ErrorCode::PreconditionFailed, "beta must be divisible by p");
    if (!ctx->same(*beta.context()) || !ctx->same(*gamma.context()))
        fail(ErrorCode::Usage, "context mismatch");

    UnramElement ai = inv(alpha);
    SemiLinearMap step{neg(mul(beta, ai)), neg(mul(gamma, ai)), 1}; // sigma(X) = aX + b

    // sigma^n by binary doubling of the semilinear map.
    SemiLinearMap acc = step;
    bool have_acc = false;
    SemiLinearMap sq = step;
    for (unsigned bits = ctx->n(); bits != 0; bits >>= 1) {
        if (bits & 1u) {
            acc = have_acc ? compose(acc, sq) : sq;
            have_acc = true;
        }
        if (bits > 1) sq = compose(sq, sq);
    }
    // sigma^n = id: X = B_n / (1 - A_n); 1 - A_n is a unit since a == 0 mod p.
    UnramElement denom = sub(one_element(ctx), acc.A);
    return mul(acc.B, inv(denom));
}

namespace {

UnramElement exact_div_pk(const UnramElement& e, unsigned k) {
    if (k == 0) return e;
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), e.context()->p().get_mpz_t(), k);
    std::vector<mpz_class> c(e.residue().coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        mpz_divexact(c[i].get_mpz_t(), e.residue().coeffs()[i].get_mpz_t(), pk.get_mpz_t());
    }
    return {e.context(), DensePoly(std::move(c), e.context()->modulus())};
}

} // namespace

UnramElement gen_newton_lift(const FrobPolynomial& phi, const UnramElement& x0, unsigned k,
                             unsigned target_precision) {
    const CtxPtr& ctx = x0.context();
    const unsigned N = ctx->precision();
    if (target_precision == 0 || target_precision > N) target_precision = N;
    const unsigned goal = std::min(target_precision + k, N);

    UnramElement sx0 = frob_element(x0, 1);
    if (element_valuation(phi.f(x0, sx0)) < std::min(2 * k + 1, N))
        fail(ErrorCode::PreconditionFailed, "phi(x0, sigma(x0)) != 0 mod p^{2k+1}");
    if (element_valuation(phi.df_dz(x0, sx0)) != std::min(k, N))
        fail(ErrorCode::PreconditionFailed, "ord_p(dphi/dZ) mismatch with k");

    UnramElement x = x0;
    unsigned max_steps = 2;
    for (unsigned m = 1; m < goal; m *= 2) ++max_steps;
    for (unsigned step = 0; step < max_steps; ++step) {
        UnramElement sx = frob_element(x, 1);
        UnramElement r = phi.f(x, sx);
        if (element_valuation(r) >= goal)
            return x;
        UnramElement a = phi.df_dz(x, sx);
        UnramElement b = phi.df_dy(x, sx);
        if (element_valuation(a) != k)
            fail(ErrorCode::PreconditionFailed, "dphi/dZ valuation drifted");
        if (element_valuation(b) < k + 1)
            fail(ErrorCode::PreconditionFailed, "dphi/dY not contracting (beta != 0 mod p)");
        UnramElement eps =
            solve_artin_schreier(exact_div_pk(a, k), exact_div_pk(b, k), exact_div_pk(r, k));
        x = add(x, eps);
    }
    UnramElement sx = frob_element(x, 1);
    if (element_valuation(phi.f(x, sx)) >= goal) return x;
    fail(ErrorCode::InternalInconsistency, "generalized Newton lift did not converge");
}

UnramElement teichmuller_lift(const UnramElement& alpha) {
    const CtxPtr& ctx = alpha.context();
    const mpz_class& p = ctx->p();
    FrobPolynomial phi;
    // phi(Y, Z) = Y^p - Z; Y^p by repeated squaring.
    phi.f = [p](const UnramElement& y, const UnramElement& z) {
        return sub(elt_pow(y, p), z);
    };
    phi.df_dy = [p](const UnramElement& y, const UnramElement&) {
        return scalar_mul(elt_pow(y, p - 1), ResidueInt(p, y.context()->modulus()));
    };
    phi.df_dz = [](const UnramElement& y, const UnramElement&) {
        return neg(one_element(y.context()));
    };
    phi.cost_budget = 4 * mpz_sizeinbase(p.get_mpz_t(), 2);
    return gen_newton_lift(phi, alpha, 0);
}

} // namespace padic
