#include "padic/arith.hpp"

namespace padic {

namespace {

const CtxPtr& check_same_context(const UnramElement& a, const UnramElement& b) {
    if (!a.context()->same(*b.context())) fail(ErrorCode::Usage, "context mismatch");
    return a.context();
}

} // namespace

UnramElement add(const UnramElement& a, const UnramElement& b) {
    return {check_same_context(a, b), padd(a.residue(), b.residue())};
}

UnramElement sub(const UnramElement& a, const UnramElement& b) {
    return {check_same_context(a, b), psub(a.residue(), b.residue())};
}

UnramElement neg(const UnramElement& a) {
    return {a.context(), pneg(a.residue())};
}

UnramElement scalar_mul(const UnramElement& a, const ResidueInt& c) {
    if (!a.context()->modulus()->same(*c.modulus())) fail(ErrorCode::Usage, "modulus mismatch");
    return {a.context(), pscale(a.residue(), c.value())};
}

UnramElement mul(const UnramElement& a, const UnramElement& b) {
    const CtxPtr& ctx = check_same_context(a, b);
    return {ctx, ctx->reduce(pmul(a.residue(), b.residue()))};
}

unsigned element_valuation(const UnramElement& a) {
    const auto& m = *a.context()->modulus();
    unsigned v = m.precision();
    for (const auto& c : a.residue().coeffs()) v = std::min(v, valuation(c, m));
    return v;
}

UnramElement reduce_mod_p(const UnramElement& a) {
    CtxPtr rc = a.context()->residue_context();
    return {rc, DensePoly(a.residue().coeffs(), rc->modulus())};
}

UnramElement truncate_element(const UnramElement& a, unsigned precision) {
    CtxPtr tc = a.context()->truncated(precision);
    return {tc, DensePoly(a.residue().coeffs(), tc->modulus())};
}

UnramElement promote_element(const UnramElement& a, const CtxPtr& ctx) {
    if (ctx->p() != a.context()->p() || ctx->n() != a.context()->n() ||
        ctx->precision() < a.context()->precision())
        fail(ErrorCode::Usage, "bad promotion target");
    return {ctx, DensePoly(a.residue().coeffs(), ctx->modulus())};
}

UnramElement inv(const UnramElement& b) {
    const CtxPtr& ctx = b.context();
    if (element_valuation(b) > 0)
        fail(ErrorCode::NonUnit, "element is not a unit", element_valuation(b));

    // Inverse over F_{p^n} by extended gcd with phibar.
    CtxPtr rc = ctx->residue_context();
    DensePoly bbar(b.residue().coeffs(), rc->modulus());
    ExtEuclidResult ee = ext_euclid(bbar, rc->phi());
    // ee.r is a nonzero constant (bbar is a unit in the field quotient)
    DensePoly g = pscale(ee.u, inverse(ee.r.coeff(0), *rc->modulus()));
    g = rc->reduce(g);

    // Precision ladder by exact ceil halving from N.
    std::vector<unsigned> steps;
    for (unsigned k = ctx->precision(); k > 1; k = (k + 1) / 2) steps.push_back(k);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        CtxPtr tc = ctx->truncated(*it);
        UnramElement gk{tc, DensePoly(g.coeffs(), tc->modulus())};
        UnramElement bk = truncate_element(b, *it);
        UnramElement two = element_from_coeffs(tc, {2});
        gk = mul(gk, sub(two, mul(bk, gk)));
        g = gk.residue();
    }
    return {ctx, DensePoly(g.coeffs(), ctx->modulus())};
}

UnramElement elt_pow(const UnramElement& a, const mpz_class& e) {
    UnramElement result = one_element(a.context());
    UnramElement sq = a;
    const std::size_t nbits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t bit = 0; bit < nbits; ++bit) {
        if (mpz_tstbit(e.get_mpz_t(), bit)) result = mul(result, sq);
        if (bit + 1 < nbits) sq = mul(sq, sq);
    }
    return result;
}

} // namespace padic
