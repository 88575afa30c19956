#include "padic/frobenius.hpp"

#include "padic/arith.hpp"
#include "padic/newton.hpp"

namespace padic {

DensePoly frob_power_image(const DensePoly& phibar, const mpz_class& p, unsigned k) {
    MonicReciprocal R(phibar);
    DensePoly x = DensePoly::x(phibar.modulus());
    if (k == 0) return R.rem(x);
    DensePoly img = powmod(x, p, R); // x^p by repeated squaring
    DensePoly result(phibar.modulus());
    bool have_result = false;
    for (unsigned bits = k; bits != 0; bits >>= 1) {
        if (bits & 1u) {
            result = have_result ? modcomp(result, img, phibar, &R) : img;
            have_result = true;
        }
        if (bits > 1) img = modcomp(img, img, phibar, &R);
    }
    return result;
}

namespace {

void check_range(const CtxPtr& ctx, unsigned k) {
    if (k >= ctx->n() && !(k == 0 && ctx->n() == 1))
        fail(ErrorCode::Usage, "Frobenius power index out of range");
}

// Image ladder at precision 1, memoized per power-of-two index plus the
// requested k.
DensePoly image_mod_p(const CtxPtr& ctx, unsigned k) {
    CtxPtr rc = ctx->residue_context();
    if (k == 0) return DensePoly::x(rc->modulus());
    if (auto hit = ctx->cached_frob_image(k, true)) return *hit;

    const DensePoly& phibar = rc->phi();
    const MonicReciprocal& R = rc->reciprocal();
    DensePoly img(rc->modulus());
    if (auto base = ctx->cached_frob_image(1, true)) {
        img = *base;
    } else {
        img = powmod(DensePoly::x(rc->modulus()), ctx->p(), R);
        ctx->store_frob_image(1, true, img);
    }
    DensePoly result(rc->modulus());
    bool have_result = false;
    unsigned step = 1;
    for (unsigned bits = k; bits != 0; bits >>= 1) {
        if (bits & 1u) {
            result = have_result ? modcomp(result, img, phibar, &R) : img;
            have_result = true;
        }
        if (bits > 1) {
            step *= 2;
            if (auto hit = ctx->cached_frob_image(step, true)) {
                img = *hit;
            } else {
                img = modcomp(img, img, phibar, &R);
                ctx->store_frob_image(step, true, img);
            }
        }
    }
    ctx->store_frob_image(k, true, result);
    return result;
}

DensePoly image_lifted(const CtxPtr& ctx, unsigned k) {
    if (ctx->precision() == 1) return image_mod_p(ctx, k);
    if (k == 0) return DensePoly::x(ctx->modulus());
    if (auto hit = ctx->cached_frob_image(k, false)) return *hit;

    DensePoly bar = image_mod_p(ctx, k);
    UnramElement y0{ctx, DensePoly(bar.coeffs(), ctx->modulus())};
    UnramElement lifted = lift_root(scalar_problem(ctx, ctx->phi(), y0));
    ctx->store_frob_image(k, false, lifted.residue());
    return lifted.residue();
}

} // namespace

FrobImage frob_generator_mod_p(const CtxPtr& ctx, unsigned k) {
    check_range(ctx, k);
    return {k, image_mod_p(ctx, k), 1};
}

FrobImage frob_generator_lifted(const CtxPtr& ctx, unsigned k) {
    check_range(ctx, k);
    return {k, image_lifted(ctx, k), ctx->precision()};
}

UnramElement frob_element(const UnramElement& alpha, long k) {
    const CtxPtr& ctx = alpha.context();
    const long n = static_cast<long>(ctx->n());
    unsigned kk = static_cast<unsigned>(((k % n) + n) % n);
    if (kk == 0) return alpha;
    DensePoly image = image_lifted(ctx, kk);
    return {ctx, modcomp(alpha.residue(), image, ctx->phi(), &ctx->reciprocal())};
}

} // namespace padic
