#include "padic/zmod.hpp"

namespace padic {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Usage: return "Usage";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::BadDegree: return "BadDegree";
        case ErrorCode::NonUnit: return "NonUnit";
        case ErrorCode::ZeroDivisorPivot: return "ZeroDivisorPivot";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

namespace {

bool miller_rabin_witness(const mpz_class& p, const mpz_class& a, const mpz_class& d, unsigned r) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    if (x == 1 || x == p - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = x * x % p;
        if (x == p - 1) return false;
    }
    return true; // composite witness
}

} // namespace

bool is_prime(const mpz_class& p) {
    if (p < 2) return false;
    if (mpz_sizeinbase(p.get_mpz_t(), 2) <= 64) {
        // Deterministic for p < 2^64 with this base set (Sinclair).
        static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        for (unsigned long b : bases) {
            if (p == b) return true;
            if (p % b == 0) return false;
        }
        mpz_class d = p - 1;
        unsigned r = 0;
        while (mpz_even_p(d.get_mpz_t())) {
            d /= 2;
            ++r;
        }
        for (unsigned long b : bases)
            if (miller_rabin_witness(p, mpz_class(b), d, r)) return false;
        return true;
    }
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

Modulus::Modulus(mpz_class p, unsigned precision) : p_(std::move(p)), precision_(precision) {
    if (precision_ < 1) fail(ErrorCode::Usage, "precision must be >= 1");
    if (!is_prime(p_)) fail(ErrorCode::NotPrime, "p = " + p_.get_str() + " is not prime");
    mpz_pow_ui(pn_.get_mpz_t(), p_.get_mpz_t(), precision_);
}

ModulusPtr Modulus::make(mpz_class p, unsigned precision) {
    return ModulusPtr(new Modulus(std::move(p), precision));
}

ModulusPtr Modulus::truncated(unsigned precision) const {
    if (precision < 1 || precision > precision_)
        fail(ErrorCode::Usage, "truncation precision out of range");
    if (precision == precision_) return make(p_, precision_);
    return make(p_, precision);
}

mpz_class canonical(const mpz_class& v, const Modulus& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.pn().get_mpz_t());
    return r;
}

unsigned valuation(const mpz_class& v, const Modulus& m) {
    mpz_class x = canonical(v, m);
    if (x == 0) return m.precision();
    unsigned val = 0;
    while (val < m.precision() && mpz_divisible_p(x.get_mpz_t(), m.p().get_mpz_t())) {
        x /= m.p();
        ++val;
    }
    return val;
}

mpz_class inverse(const mpz_class& v, const Modulus& m) {
    mpz_class x = canonical(v, m);
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.pn().get_mpz_t()))
        fail(ErrorCode::NonUnit, "not a unit mod p^N", valuation(x, m));
    return r;
}

mpz_class inverse_newton(const mpz_class& v, const Modulus& m) {
    mpz_class x = canonical(v, m);
    mpz_class xp = x % m.p();
    mpz_class g;
    if (!mpz_invert(g.get_mpz_t(), xp.get_mpz_t(), m.p().get_mpz_t()))
        fail(ErrorCode::NonUnit, "not a unit mod p^N", valuation(x, m));
    // Exact precision ladder by ceil halving from N.
    unsigned steps[64];
    unsigned count = 0;
    for (unsigned k = m.precision(); k > 1; k = (k + 1) / 2) steps[count++] = k;
    mpz_class pk;
    while (count > 0) {
        unsigned k = steps[--count];
        mpz_pow_ui(pk.get_mpz_t(), m.p().get_mpz_t(), k);
        g = g * (2 - x * g) % pk;
        if (g < 0) g += pk;
    }
    return g;
}

ResidueInt zadd(const ResidueInt& a, const ResidueInt& b) {
    if (!a.modulus()->same(*b.modulus())) fail(ErrorCode::Usage, "modulus mismatch");
    return {a.value() + b.value(), a.modulus()};
}

ResidueInt zsub(const ResidueInt& a, const ResidueInt& b) {
    if (!a.modulus()->same(*b.modulus())) fail(ErrorCode::Usage, "modulus mismatch");
    return {a.value() - b.value(), a.modulus()};
}

ResidueInt zneg(const ResidueInt& a) {
    return {-a.value(), a.modulus()};
}

ResidueInt zmul(const ResidueInt& a, const ResidueInt& b) {
    if (!a.modulus()->same(*b.modulus())) fail(ErrorCode::Usage, "modulus mismatch");
    return {a.value() * b.value(), a.modulus()};
}

ResidueInt zinv(const ResidueInt& b) {
    return {inverse(b.value(), *b.modulus()), b.modulus()};
}

unsigned zval(const ResidueInt& a) {
    return valuation(a.value(), *a.modulus());
}

ResidueInt zreduce(const ResidueInt& a, unsigned precision) {
    return {a.value(), a.modulus()->truncated(precision)};
}

} // namespace padic
