#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>

#include "padic/poly.hpp"

namespace padic {

class RingContext;
using CtxPtr = std::shared_ptr<const RingContext>;

/// The ring Z_{p^n} mod p^N represented as Z_p[x]/phi(x) for a monic phi of
/// degree n that is irreducible mod p (checked with Rabin's criterion at
/// construction). Immutable after creation except the write-once Frobenius
/// image cache, which is safe under concurrent readers.
class RingContext : public std::enable_shared_from_this<RingContext> {
public:
    static CtxPtr create(mpz_class p, unsigned n, unsigned N, DensePoly phi);

    const mpz_class& p() const noexcept { return mod_->p(); }
    unsigned n() const noexcept { return n_; }
    unsigned precision() const noexcept { return mod_->precision(); }
    const ModulusPtr& modulus() const noexcept { return mod_; }
    const ModulusPtr& modulus_mod_p() const noexcept { return mod_p_; }
    const DensePoly& phi() const noexcept { return phi_; }
    const DensePoly& phi_bar() const noexcept { return phi_bar_; }
    const MonicReciprocal& reciprocal() const noexcept { return recip_; }
    const MonicReciprocal& reciprocal_mod_p() const noexcept { return recip_p_; }

    /// Reduce an arbitrary-degree polynomial mod phi (cached reciprocal).
    DensePoly reduce(const DensePoly& f) const { return recip_.rem(f); }

    bool same(const RingContext& other) const;

    /// The N=1 view of this context (lazily built, shared).
    CtxPtr residue_context() const;
    /// A lower-precision view; skips revalidation (phi is already known
    /// irreducible mod p).
    CtxPtr truncated(unsigned precision) const;

    // Write-once Frobenius image cache, keyed by power index.
    std::optional<DensePoly> cached_frob_image(unsigned k, bool mod_p) const;
    void store_frob_image(unsigned k, bool mod_p, const DensePoly& image) const;

protected:
    RingContext(unsigned n, ModulusPtr mod, DensePoly phi);

private:
    unsigned n_;
    ModulusPtr mod_;
    DensePoly phi_;
    MonicReciprocal recip_;
    ModulusPtr mod_p_;
    DensePoly phi_bar_;
    MonicReciprocal recip_p_;

    mutable std::mutex cache_mu_;
    mutable std::map<unsigned, DensePoly> frob_cache_;
    mutable std::map<unsigned, DensePoly> frob_cache_p_;
    mutable CtxPtr residue_ctx_;
};

/// Residue polynomial of degree < n tied to a context.
class UnramElement {
public:
    UnramElement(CtxPtr ctx, DensePoly residue);

    const CtxPtr& context() const noexcept { return ctx_; }
    const DensePoly& residue() const noexcept { return r_; }
    bool is_zero() const noexcept { return r_.is_zero(); }

    /// Coefficients padded to length n.
    std::vector<mpz_class> coeff_vector() const;

    friend bool operator==(const UnramElement& a, const UnramElement& b) {
        return a.ctx_->same(*b.ctx_) && a.r_ == b.r_;
    }

private:
    CtxPtr ctx_;
    DensePoly r_;
};

/// Canonical element from <= n coefficients; longer inputs reduced mod phi.
UnramElement element_from_coeffs(const CtxPtr& ctx, const std::vector<mpz_class>& coeffs);

/// The class of x itself (reduced mod phi, so a constant when n = 1).
UnramElement generator(const CtxPtr& ctx);

UnramElement zero_element(const CtxPtr& ctx);
UnramElement one_element(const CtxPtr& ctx);

/// Seeded uniformly random residue; same seed gives the same element.
UnramElement random_element(const CtxPtr& ctx, std::uint64_t seed);

/// Deterministic search for a context with random monic phi irreducible
/// mod p (harness support; validated through the normal create() path).
CtxPtr find_irreducible_context(const mpz_class& p, unsigned n, unsigned N, std::uint64_t seed);

} // namespace padic
