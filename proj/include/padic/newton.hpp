#pragma once

#include "padic/arith.hpp"

namespace padic {

/// A simple-root lifting problem: f given by coefficients over the big ring
/// (constants embed the Z_p-coefficient case), with starting point y0
/// satisfying f(y0) == 0 mod p and f'(y0) a unit mod p.
struct NewtonProblem {
    std::vector<UnramElement> coeffs; // low-degree-first
    UnramElement y0;
};

NewtonProblem scalar_problem(const CtxPtr& ctx, const DensePoly& f, const UnramElement& y0);

/// Horner evaluation; switches to modular composition when every coefficient
/// is a constant and the degree permits.
UnramElement eval_poly_at(const std::vector<UnramElement>& coeffs, const UnramElement& y);

/// Root lifting with precision doubling. Throws PreconditionFailed if y0 is
/// not a simple root mod p.
UnramElement lift_root(const NewtonProblem& problem);

/// The iterates y_1, y_2, ... (promoted to full precision); the last entry is
/// the lifted root. Exposed for convergence-trace checks.
std::vector<UnramElement> lift_root_iterates(const NewtonProblem& problem);

} // namespace padic
