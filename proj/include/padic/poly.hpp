#pragma once

#include <vector>

#include "padic/zmod.hpp"

namespace padic {

/// Dense univariate polynomial over Z/p^N, low-degree-first coefficients.
/// Normalized: no trailing zeros; the zero polynomial has an empty
/// coefficient vector and degree() == -1 (the degree sentinel for -infinity).
class DensePoly {
public:
    explicit DensePoly(ModulusPtr m) : m_(std::move(m)) {}
    DensePoly(std::vector<mpz_class> coeffs, ModulusPtr m);

    static DensePoly constant(const mpz_class& c, const ModulusPtr& m);
    static DensePoly x(const ModulusPtr& m);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    /// Coefficient of X^i, zero beyond the degree.
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    const ModulusPtr& modulus() const noexcept { return m_; }

    /// Same coefficients reduced into a lower-precision modulus.
    DensePoly truncated(unsigned precision) const;
    /// Reinterpret the (unchanged) coefficients under another descriptor for
    /// the same p; requires them to already be canonical there.
    DensePoly promoted(const ModulusPtr& m) const;

    friend bool operator==(const DensePoly& a, const DensePoly& b) {
        return a.m_->same(*b.m_) && a.c_ == b.c_;
    }

private:
    ModulusPtr m_;
    std::vector<mpz_class> c_;
};

DensePoly padd(const DensePoly& a, const DensePoly& b);
DensePoly psub(const DensePoly& a, const DensePoly& b);
DensePoly pneg(const DensePoly& a);
DensePoly pscale(const DensePoly& a, const mpz_class& c);
DensePoly derivative(const DensePoly& a);

/// Product. Schoolbook below kPmulKroneckerCutoff, Kronecker substitution
/// (coefficient packing into one big-integer product) above.
DensePoly pmul(const DensePoly& a, const DensePoly& b);
DensePoly pmul_schoolbook(const DensePoly& a, const DensePoly& b);

inline constexpr std::size_t kPmulKroneckerCutoff = 16;
inline constexpr int kDivremNewtonCutoff = 16;
inline constexpr int kModcompHornerCutoff = 8;
inline constexpr std::size_t kProjectionBsgsCutoff = 8;

struct DivRem {
    DensePoly quotient;
    DensePoly remainder;
};

/// Division with remainder by a monic divisor. Throws NotMonic.
DivRem pdivrem_monic(const DensePoly& f, const DensePoly& h);

/// Cached Newton reciprocal of the reversal of a monic divisor, for repeated
/// reduction mod h. Precomputes enough series terms at construction for
/// inputs of degree <= max_input_degree (default: products of two residues);
/// larger inputs fall back to schoolbook division. Immutable, shareable.
class MonicReciprocal {
public:
    explicit MonicReciprocal(DensePoly h, int max_input_degree = -1);

    const DensePoly& divisor() const noexcept { return h_; }
    DensePoly rem(const DensePoly& f) const;
    DivRem divrem(const DensePoly& f) const;

private:
    DensePoly h_;
    DensePoly recip_; // inverse of rev(h) mod X^terms_
    std::size_t terms_;
};

/// f(g(X)) mod h(X) by baby-step/giant-step composition with a Horner
/// fallback below kModcompHornerCutoff. Requires h monic; f and g may have
/// any degree (g is reduced mod h first, valid since f(g+qh) = f(g) mod h).
DensePoly modcomp(const DensePoly& f, const DensePoly& g, const DensePoly& h,
                  const MonicReciprocal* recip = nullptr);

DensePoly powmod(const DensePoly& base, const mpz_class& exp, const MonicReciprocal& h);

/// <proj, g^i mod h> for i = 0..count-1 (coefficient dot products).
/// power_projection_reference iterates t <- t*g mod h and projects each step;
/// power_projection is the transposed baby-step/giant-step path and matches
/// the reference bit-exactly.
std::vector<mpz_class> power_projection_reference(const std::vector<mpz_class>& proj,
                                                  const DensePoly& g, const DensePoly& h,
                                                  std::size_t count);
std::vector<mpz_class> power_projection(const std::vector<mpz_class>& proj,
                                        const DensePoly& g, const DensePoly& h,
                                        std::size_t count);

/// Minimal polynomial of the linear recurrence s (length 2n), via the
/// extended Euclidean descent on f(X) = X^{2n} and g(X) = sum s_i X^{2n-1-i},
/// stopping at the first remainder of degree < n. Returns the monic c(X).
/// Throws ZeroDivisorPivot when a required pivot is a non-unit mod p^N.
DensePoly minpoly_from_sequence(const std::vector<mpz_class>& s, const ModulusPtr& m);

/// Res_X(f, g) mod p^N for monic f: subresultant pseudo-remainder descent on
/// the lifted integer coefficients, reduced at the end.
ResidueInt resultant(const DensePoly& f, const DensePoly& g);

struct ExtEuclidResult {
    DensePoly r; // gcd-like remainder
    DensePoly u; // Bezout: u*f + v*g = r
    DensePoly v;
};

/// Extended Euclid along unit-pivot paths; over N=1 this is the field
/// algorithm. Throws ZeroDivisorPivot on a non-unit pivot.
ExtEuclidResult ext_euclid(const DensePoly& f, const DensePoly& g);

/// Monic gcd over a precision-1 (field) modulus.
DensePoly poly_gcd_field(DensePoly a, DensePoly b);

} // namespace padic
