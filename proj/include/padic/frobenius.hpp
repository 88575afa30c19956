#pragma once

#include "padic/context.hpp"

namespace padic {

/// sigma^k(x) as a residue polynomial, together with its power index and the
/// precision it is valid at (1 or N). The image is a root of phi at that
/// precision.
struct FrobImage {
    unsigned k;
    DensePoly image;
    unsigned precision;
};

/// x^{p^k} mod (phibar, p): base image x^p by repeated squaring, then
/// composition along the binary digits of k. Works on a bare mod-p modulus
/// polynomial (used by context validation before a context exists).
DensePoly frob_power_image(const DensePoly& phibar, const mpz_class& p, unsigned k);

/// sigma^k on the generator at precision 1 (cached in the context ladder).
FrobImage frob_generator_mod_p(const CtxPtr& ctx, unsigned k);

/// sigma^k on the generator at precision N: the unique root of phi congruent
/// to the mod-p image, obtained by Newton lifting; memoized write-once.
FrobImage frob_generator_lifted(const CtxPtr& ctx, unsigned k);

/// sigma^k(alpha) = alpha(sigma^k(x)) mod phi. k is reduced mod n; k = 0 (and
/// n = 1) short-circuits to the identity.
UnramElement frob_element(const UnramElement& alpha, long k);

} // namespace padic
