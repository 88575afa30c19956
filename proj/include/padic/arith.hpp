#pragma once

#include "padic/context.hpp"

namespace padic {

UnramElement add(const UnramElement& a, const UnramElement& b);
UnramElement sub(const UnramElement& a, const UnramElement& b);
UnramElement neg(const UnramElement& a);
UnramElement scalar_mul(const UnramElement& a, const ResidueInt& c);

/// Product mod (phi, p^N): pmul then reduction with the cached reciprocal.
UnramElement mul(const UnramElement& a, const UnramElement& b);

/// Inverse of a unit: mod-p inverse by field extended gcd, then the Newton
/// iteration g <- g(2 - b g) along the exact ceil-halving precision ladder
/// 1 -> ... -> N. Throws NonUnit when beta == 0 mod p.
UnramElement inv(const UnramElement& b);

/// Valuation of an element: min coefficient valuation, capped at N.
unsigned element_valuation(const UnramElement& a);

/// Image in the N=1 context F_{p^n}.
UnramElement reduce_mod_p(const UnramElement& a);

/// Same coefficients in a lower-precision view of the context.
UnramElement truncate_element(const UnramElement& a, unsigned precision);
/// Reinterpret in a higher-precision compatible context (values unchanged).
UnramElement promote_element(const UnramElement& a, const CtxPtr& ctx);

/// a^e by square and multiply (e >= 0).
UnramElement elt_pow(const UnramElement& a, const mpz_class& e);

inline UnramElement operator+(const UnramElement& a, const UnramElement& b) { return add(a, b); }
inline UnramElement operator-(const UnramElement& a, const UnramElement& b) { return sub(a, b); }
inline UnramElement operator-(const UnramElement& a) { return neg(a); }
inline UnramElement operator*(const UnramElement& a, const UnramElement& b) { return mul(a, b); }

} // namespace padic
