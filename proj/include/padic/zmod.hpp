#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>

#include "padic/errors.hpp"

namespace padic {

class Modulus;
using ModulusPtr = std::shared_ptr<const Modulus>;

/// Modulus descriptor (p, N) for the coefficient ring Z/p^N, with p^N cached.
/// p is validated prime at construction: deterministic Miller-Rabin below
/// 2^64, strong probable-prime test beyond.
class Modulus {
public:
    static ModulusPtr make(mpz_class p, unsigned precision);

    const mpz_class& p() const noexcept { return p_; }
    unsigned precision() const noexcept { return precision_; }
    const mpz_class& pn() const noexcept { return pn_; }

    bool same(const Modulus& other) const {
        return precision_ == other.precision_ && p_ == other.p_;
    }

    /// Descriptor for the same p at a lower precision.
    ModulusPtr truncated(unsigned precision) const;

private:
    Modulus(mpz_class p, unsigned precision);
    mpz_class p_;
    unsigned precision_;
    mpz_class pn_;
};

bool is_prime(const mpz_class& p);

/// Canonical representative in [0, p^N).
mpz_class canonical(const mpz_class& v, const Modulus& m);

/// p-adic valuation of the canonical representative, capped at N.
/// Returns N for zero (valuation indistinguishable from N at this precision).
unsigned valuation(const mpz_class& v, const Modulus& m);

/// Inverse mod p^N by extended gcd. Throws NonUnit (with valuation) if p | v.
mpz_class inverse(const mpz_class& v, const Modulus& m);

/// Inverse by lifting the mod-p inverse with Newton doubling; agrees with
/// inverse() bit-exactly (cross-checked in tests).
mpz_class inverse_newton(const mpz_class& v, const Modulus& m);

/// A residue in Z/p^N with its modulus descriptor. Always canonical.
class ResidueInt {
public:
    ResidueInt(mpz_class value, ModulusPtr modulus)
        : m_(std::move(modulus)), v_(canonical(value, *m_)) {}

    const mpz_class& value() const noexcept { return v_; }
    const ModulusPtr& modulus() const noexcept { return m_; }

    std::string str() const { return v_.get_str(); }
    bool is_zero() const { return v_ == 0; }

    friend bool operator==(const ResidueInt& a, const ResidueInt& b) {
        return a.m_->same(*b.m_) && a.v_ == b.v_;
    }

private:
    ModulusPtr m_;
    mpz_class v_;
};

ResidueInt zadd(const ResidueInt& a, const ResidueInt& b);
ResidueInt zsub(const ResidueInt& a, const ResidueInt& b);
ResidueInt zneg(const ResidueInt& a);
ResidueInt zmul(const ResidueInt& a, const ResidueInt& b);
ResidueInt zinv(const ResidueInt& b);
unsigned zval(const ResidueInt& a);
ResidueInt zreduce(const ResidueInt& a, unsigned precision);

} // namespace padic
