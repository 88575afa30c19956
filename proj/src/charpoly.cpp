#include "padic/charpoly.hpp"

#include "padic/arith.hpp"
#include "padic/frobenius.hpp"
#include "padic/semilinear.hpp"

namespace padic {

ProjectionFunctional ProjectionFunctional::dual_of_one(const CtxPtr& ctx) {
    std::vector<mpz_class> w(ctx->n());
    w[0] = 1;
    return {std::move(w)};
}

ProjectionFunctional ProjectionFunctional::random(const CtxPtr& ctx, std::uint64_t seed) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(seed));
    std::vector<mpz_class> w(ctx->n());
    for (auto& wi : w) wi = rng.get_z_range(ctx->modulus()->pn());
    return {std::move(w)};
}

namespace {

bool verify_annihilates(const DensePoly& c, const UnramElement& alpha) {
    const CtxPtr& ctx = alpha.context();
    unsigned n = ctx->n();
    if (c.degree() < 1 || c.degree() > static_cast<int>(n)) return false;
    if (!c.is_monic()) return false;
    if (n % static_cast<unsigned>(c.degree()) != 0) return false;
    DensePoly value = modcomp(c, alpha.residue(), ctx->phi(), &ctx->reciprocal());
    return value.is_zero();
}

} // namespace

DensePoly minimal_polynomial_projection(const UnramElement& alpha,
                                        const ProjectionFunctional& proj) {
    const CtxPtr& ctx = alpha.context();
    std::vector<mpz_class> seq =
        power_projection(proj.weights, alpha.residue(), ctx->phi(), 2 * ctx->n());
    DensePoly c = minpoly_from_sequence(seq, ctx->modulus());
    if (!verify_annihilates(c, alpha))
        fail(ErrorCode::InternalInconsistency, "projection minimal polynomial failed verification");
    return c;
}

DensePoly minimal_polynomial_orbit(const UnramElement& alpha) {
    const CtxPtr& ctx = alpha.context();
    std::vector<UnramElement> orbit{alpha};
    for (;;) {
        UnramElement next = frob_element(orbit.back(), 1);
        if (next == alpha) break;
        orbit.push_back(std::move(next));
        if (orbit.size() > ctx->n())
            fail(ErrorCode::InternalInconsistency, "sigma-orbit exceeds n");
    }
    const std::size_t d = orbit.size();
    if (ctx->n() % d != 0)
        fail(ErrorCode::InternalInconsistency, "sigma-orbit size does not divide n");

    // Expand prod (X - conjugate) over the big ring.
    std::vector<UnramElement> coeffs{one_element(ctx)};
    for (const auto& conj : orbit) {
        std::vector<UnramElement> next(coeffs.size() + 1, zero_element(ctx));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = add(next[i + 1], coeffs[i]);
            next[i] = sub(next[i], mul(coeffs[i], conj));
        }
        coeffs = std::move(next);
    }
    // Galois invariance forces constant coefficients.
    std::vector<mpz_class> scalars(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].residue().degree() > 0)
            fail(ErrorCode::InternalInconsistency, "orbit product has non-constant coefficient");
        scalars[i] = coeffs[i].residue().coeff(0);
    }
    return DensePoly(std::move(scalars), ctx->modulus());
}

DensePoly minimal_polynomial(const UnramElement& alpha) {
    const CtxPtr& ctx = alpha.context();
    try {
        return minimal_polynomial_projection(alpha, ProjectionFunctional::dual_of_one(ctx));
    } catch (const Error&) {
    }
    try {
        return minimal_polynomial_projection(alpha,
                                             ProjectionFunctional::random(ctx, 0x9e3779b9u));
    } catch (const Error&) {
    }
    return minimal_polynomial_orbit(alpha);
}

ResidueInt trace(const UnramElement& alpha) {
    const CtxPtr& ctx = alpha.context();
    DensePoly c = minimal_polynomial(alpha);
    unsigned d = static_cast<unsigned>(c.degree());
    mpz_class e = ctx->n() / d;
    return {-e * c.coeff(d - 1), ctx->modulus()};
}

ResidueInt norm(const UnramElement& alpha) {
    const CtxPtr& ctx = alpha.context();
    DensePoly c = minimal_polynomial(alpha);
    unsigned d = static_cast<unsigned>(c.degree());
    unsigned e = ctx->n() / d;
    mpz_class base = d % 2 == 0 ? c.coeff(0) : -c.coeff(0);
    mpz_class r;
    mpz_class bc = canonical(base, *ctx->modulus());
    mpz_powm_ui(r.get_mpz_t(), bc.get_mpz_t(), e, ctx->modulus()->pn().get_mpz_t());
    return {r, ctx->modulus()};
}

ResidueInt norm_resultant(const UnramElement& alpha) {
    return resultant(alpha.context()->phi(), alpha.residue());
}

DensePoly teichmuller_modulus(const CtxPtr& ctx) {
    UnramElement t = teichmuller_lift(generator(ctx));
    DensePoly f = minimal_polynomial(t);
    if (f.degree() != static_cast<int>(ctx->n()))
        fail(ErrorCode::InternalInconsistency, "Teichmueller modulus has wrong degree");
    return f;
}

bool is_teichmuller_modulus(const DensePoly& F, const mpz_class& p, unsigned n, unsigned N) {
    CtxPtr ctx = RingContext::create(p, n, N, F);
    const MonicReciprocal& R = ctx->reciprocal();
    DensePoly u = powmod(DensePoly::x(ctx->modulus()), p, R); // x^p mod (F, p^N)
    DensePoly img = u;
    for (unsigned i = 1; i < n; ++i) img = modcomp(img, u, ctx->phi(), &R);
    return img == R.rem(DensePoly::x(ctx->modulus()));
}

} // namespace padic
