#pragma once

#include <gmpxx.h>

#include <vector>

#include "padic/errors.hpp"

namespace padic::oracle {

/// Naive reference ring: same (p, n, N, phi) data as RingContext, no caches,
/// and no code shared with the fast modules (own reduction, own powering).
/// Elements are coefficient vectors of length n, canonical mod p^N.
class NaiveRing {
public:
    using Elt = std::vector<mpz_class>;

    NaiveRing(mpz_class p, unsigned n, unsigned N, std::vector<mpz_class> phi);

    const mpz_class& p() const noexcept { return p_; }
    unsigned n() const noexcept { return n_; }
    unsigned precision() const noexcept { return N_; }
    const mpz_class& pn() const noexcept { return pN_; }
    /// Ring cardinality p^{nN}.
    mpz_class cardinality() const;

    Elt from(const std::vector<mpz_class>& coeffs) const;
    Elt zero() const { return Elt(n_, 0); }
    Elt one() const;
    /// Enumeration for exhaustive modes: the index written base p^N.
    Elt element_at(const mpz_class& index) const;

    bool is_zero(const Elt& a) const;
    unsigned valuation(const Elt& a) const; // min coefficient valuation, capped at N

    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const; // schoolbook product, long-division reduction
    Elt pow(const Elt& a, const mpz_class& e) const;

    /// Fermat inverse in the residue field, then linear digit-by-digit lifting.
    Elt inv(const Elt& a) const;

    /// sigma^k: literal x^{p^k} power in the mod-p ring, digit-wise Hensel
    /// lifting of that root of phi, then Horner substitution.
    Elt frob(const Elt& a, unsigned k) const;

    /// Solves alpha*sigma(X) + beta*X + gamma = 0: exhaustive scan when
    /// p^{nN} <= 10^4, else fixed-point iteration X <- sigma^{-1}(-(beta X + gamma)/alpha).
    Elt solve_as(const Elt& alpha, const Elt& beta, const Elt& gamma) const;

    /// Teichmueller lift: exhaustive scan when p^{nN} <= 10^4, else the
    /// fixed-point iteration T <- T^{p^n}.
    Elt teich(const Elt& a) const;

    /// Minimal polynomial as the expanded conjugate product (naive ops only);
    /// returned low-degree-first, monic.
    std::vector<mpz_class> minpoly(const Elt& a) const;

    /// Minimal polynomial of the reduction mod p, by dense linear algebra
    /// over F_p.
    std::vector<mpz_class> minpoly_mod_p(const Elt& a) const;

private:
    Elt reduce_poly(std::vector<mpz_class> c) const; // mod (phi, p^N), own long division
    Elt mod_p(const Elt& a) const;
    Elt frob_generator(unsigned k) const; // lifted sigma^k(x)

    mpz_class p_;
    unsigned n_;
    unsigned N_;
    mpz_class pN_;
    std::vector<mpz_class> phi_;
};

} // namespace padic::oracle
