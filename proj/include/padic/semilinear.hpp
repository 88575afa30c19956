#pragma once

#include <functional>

#include "padic/arith.hpp"

namespace padic {

/// The affine sigma^k-semilinear relation sigma^k(X) = A*X + B.
struct SemiLinearMap {
    UnramElement A;
    UnramElement B;
    unsigned k;
};

/// Composition forced by sigma^{j+k}(X) = sigma^k(sigma^j(X)):
/// (A_j,B_j,j) then (A_k,B_k,k) -> (s^k(A_j)A_k, s^k(A_j)B_k + s^k(B_j), j+k).
SemiLinearMap compose(const SemiLinearMap& first, const SemiLinearMap& second);

/// The unique X with alpha*sigma(X) + beta*X + gamma = 0, for beta == 0 mod p
/// and alpha a unit: rewrite sigma(X) = aX + b, double the semilinear map up
/// to sigma^n = id, then X = B_n / (1 - A_n).
UnramElement solve_artin_schreier(const UnramElement& alpha, const UnramElement& beta,
                                  const UnramElement& gamma);

/// Evaluator triple for a bivariate phi(Y, Z) and its partials. Evaluators
/// must be pure. cost_budget is the declared operation count (informational).
struct FrobPolynomial {
    using Eval = std::function<UnramElement(const UnramElement&, const UnramElement&)>;
    Eval f;
    Eval df_dy;
    Eval df_dz;
    unsigned long cost_budget = 0;
};

/// Generalized Newton lifting of phi(X, sigma(X)) == 0 from x0 with
/// phi(x0, sigma(x0)) == 0 mod p^{2k+1} and k = ord_p(dphi/dZ). Each step
/// linearizes and solves the correction with solve_artin_schreier. Fully
/// exercised for k = 0; the k > 0 path follows the same contract but is
/// experimental.
UnramElement gen_newton_lift(const FrobPolynomial& phi, const UnramElement& x0, unsigned k,
                             unsigned target_precision = 0);

/// The unique T == alpha mod p with sigma(T) = T^p (equivalently
/// T^{p^n} = T mod p^N), via gen_newton_lift on Y^p - Z.
UnramElement teichmuller_lift(const UnramElement& alpha);

} // namespace padic
