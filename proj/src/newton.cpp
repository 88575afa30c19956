#include "padic/newton.hpp"

namespace padic {

NewtonProblem scalar_problem(const CtxPtr& ctx, const DensePoly& f, const UnramElement& y0) {
    std::vector<UnramElement> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) coeffs.push_back(element_from_coeffs(ctx, {c}));
    return {std::move(coeffs), y0};
}

namespace {

bool all_scalar(const std::vector<UnramElement>& coeffs) {
    for (const auto& c : coeffs)
        if (c.residue().degree() > 0) return false;
    return true;
}

std::vector<UnramElement> truncate_coeffs(const std::vector<UnramElement>& coeffs, unsigned prec) {
    std::vector<UnramElement> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(truncate_element(c, prec));
    return out;
}

std::vector<UnramElement> poly_derivative(const std::vector<UnramElement>& coeffs) {
    std::vector<UnramElement> out;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        const auto& ctx = coeffs[i].context();
        out.push_back(scalar_mul(coeffs[i], ResidueInt(mpz_class(i), ctx->modulus())));
    }
    return out;
}

} // namespace

UnramElement eval_poly_at(const std::vector<UnramElement>& coeffs, const UnramElement& y) {
    const CtxPtr& ctx = y.context();
    if (coeffs.empty()) return zero_element(ctx);
    if (all_scalar(coeffs) && coeffs.size() <= ctx->n() + 1) {
        std::vector<mpz_class> fc(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) fc[i] = coeffs[i].residue().coeff(0);
        DensePoly f(std::move(fc), ctx->modulus());
        return {ctx, modcomp(f, y.residue(), ctx->phi(), &ctx->reciprocal())};
    }
    UnramElement acc = zero_element(ctx);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, y), coeffs[i]);
    return acc;
}

std::vector<UnramElement> lift_root_iterates(const NewtonProblem& problem) {
    const CtxPtr& ctx = problem.y0.context();
    const unsigned N = ctx->precision();

    std::vector<UnramElement> dcoeffs = poly_derivative(problem.coeffs);
    {
        std::vector<UnramElement> cbar = truncate_coeffs(problem.coeffs, 1);
        UnramElement y0bar = truncate_element(problem.y0, 1);
        if (!eval_poly_at(cbar, y0bar).is_zero())
            fail(ErrorCode::PreconditionFailed, "f(y0) != 0 mod p");
        std::vector<UnramElement> dbar = truncate_coeffs(dcoeffs, 1);
        if (eval_poly_at(dbar, y0bar).is_zero())
            fail(ErrorCode::PreconditionFailed, "f'(y0) == 0 mod p (not a simple root)");
    }

    std::vector<UnramElement> iterates;
    UnramElement cur = truncate_element(problem.y0, 1);
    unsigned prec = 1;
    while (prec < N) {
        prec = std::min(2 * prec, N);
        CtxPtr tc = ctx->truncated(prec);
        UnramElement y = promote_element(cur, tc);
        std::vector<UnramElement> fc = truncate_coeffs(problem.coeffs, prec);
        UnramElement fy = eval_poly_at(fc, y);
        UnramElement dfy = eval_poly_at(truncate_coeffs(dcoeffs, prec), y);
        cur = sub(y, mul(fy, inv(dfy)));
        iterates.push_back(promote_element(cur, ctx));
    }
    if (iterates.empty()) iterates.push_back(promote_element(cur, ctx)); // N == 1
    return iterates;
}

UnramElement lift_root(const NewtonProblem& problem) {
    return lift_root_iterates(problem).back();
}

} // namespace padic
