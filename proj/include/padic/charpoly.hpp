#pragma once

#include "padic/context.hpp"

namespace padic {

/// Linear functional Z_p[x]/phi -> Z_p on the power basis. The default is
/// dual-of-1: weight 1 on the constant coefficient, 0 elsewhere.
struct ProjectionFunctional {
    std::vector<mpz_class> weights;

    static ProjectionFunctional dual_of_one(const CtxPtr& ctx);
    static ProjectionFunctional random(const CtxPtr& ctx, std::uint64_t seed);
};

/// Monic minimal polynomial of alpha over Z_p mod p^N (degree dividing n).
/// Primary path: power projection + Euclidean recurrence solving; on a
/// zero-divisor pivot or failed verification, one randomized-projection retry,
/// then the always-correct sigma-orbit product fallback.
DensePoly minimal_polynomial(const UnramElement& alpha);

/// Primary path only (throws ZeroDivisorPivot / InternalInconsistency).
DensePoly minimal_polynomial_projection(const UnramElement& alpha,
                                        const ProjectionFunctional& proj);
/// Fallback path only: product of (X - sigma^i(alpha)) over the orbit.
DensePoly minimal_polynomial_orbit(const UnramElement& alpha);

ResidueInt trace(const UnramElement& alpha);
ResidueInt norm(const UnramElement& alpha);

/// Norm as Res_X(phi(X), alpha(X)); must agree with norm().
ResidueInt norm_resultant(const UnramElement& alpha);

/// F(X) = minimal polynomial of the Teichmueller lift of x: monic degree n,
/// congruent to phi mod p, and a divisor of X^{p^n} - X.
DensePoly teichmuller_modulus(const CtxPtr& ctx);

/// Divisor-property check: X^{p^n} == X mod (F, p^N), via the composition
/// ladder in the context defined by F.
bool is_teichmuller_modulus(const DensePoly& F, const mpz_class& p, unsigned n, unsigned N);

} // namespace padic
