#include "padic/context.hpp"

#include "padic/frobenius.hpp"

namespace padic {

namespace {

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin's criterion: x^{p^n} == x mod (phibar, p) and
// gcd(x^{p^{n/l}} - x, phibar) = 1 for every prime l | n.
bool is_irreducible_mod_p(const DensePoly& phibar, const mpz_class& p, unsigned n) {
    DensePoly x = DensePoly::x(phibar.modulus());
    if (!(frob_power_image(phibar, p, n) == x)) return false;
    for (unsigned l : prime_factors(n)) {
        DensePoly g = poly_gcd_field(psub(frob_power_image(phibar, p, n / l), x), phibar);
        if (g.degree() != 0) return false;
    }
    return true;
}

struct TrustedTag {};

} // namespace

RingContext::RingContext(unsigned n, ModulusPtr mod, DensePoly phi)
    : n_(n),
      mod_(std::move(mod)),
      phi_(std::move(phi)),
      recip_(phi_),
      mod_p_(mod_->precision() == 1 ? mod_ : mod_->truncated(1)),
      phi_bar_(phi_.coeffs(), mod_p_),
      recip_p_(phi_bar_) {}

namespace {

// Grants make_shared-style access to the private constructor.
struct RingContextAccess : RingContext {
    RingContextAccess(unsigned n, ModulusPtr mod, DensePoly phi)
        : RingContext(n, std::move(mod), std::move(phi)) {}
};

CtxPtr make_trusted(unsigned n, ModulusPtr mod, DensePoly phi) {
    return std::make_shared<const RingContextAccess>(n, std::move(mod), std::move(phi));
}

} // namespace

CtxPtr RingContext::create(mpz_class p, unsigned n, unsigned N, DensePoly phi) {
    if (n < 1) fail(ErrorCode::Usage, "extension degree must be >= 1");
    ModulusPtr mod = Modulus::make(std::move(p), N);
    DensePoly phin(phi.coeffs(), mod);
    if (phin.degree() != static_cast<int>(n))
        fail(ErrorCode::BadDegree, "phi must have degree n");
    if (!phin.is_monic()) fail(ErrorCode::NotMonic, "phi must be monic");
    if (n > 1) {
        DensePoly phibar(phin.coeffs(), mod->truncated(1));
        if (phibar.degree() != static_cast<int>(n))
            fail(ErrorCode::NotIrreducible, "phi degenerates mod p");
        if (!is_irreducible_mod_p(phibar, mod->p(), n))
            fail(ErrorCode::NotIrreducible, "phi is reducible mod p");
    }
    // n = 1: any monic linear phi is inert by convention.
    return make_trusted(n, std::move(mod), std::move(phin));
}

bool RingContext::same(const RingContext& other) const {
    if (this == &other) return true;
    return n_ == other.n_ && mod_->same(*other.mod_) && phi_.coeffs() == other.phi_.coeffs();
}

CtxPtr RingContext::residue_context() const {
    if (precision() == 1) return shared_from_this();
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (!residue_ctx_) residue_ctx_ = make_trusted(n_, mod_p_, phi_bar_);
    return residue_ctx_;
}

CtxPtr RingContext::truncated(unsigned prec) const {
    if (prec == precision()) return shared_from_this();
    if (prec == 1) return residue_context();
    return make_trusted(n_, mod_->truncated(prec), phi_.truncated(prec));
}

std::optional<DensePoly> RingContext::cached_frob_image(unsigned k, bool mod_p) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    const auto& cache = mod_p ? frob_cache_p_ : frob_cache_;
    auto it = cache.find(k);
    if (it == cache.end()) return std::nullopt;
    return it->second;
}

void RingContext::store_frob_image(unsigned k, bool mod_p, const DensePoly& image) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto& cache = mod_p ? frob_cache_p_ : frob_cache_;
    cache.emplace(k, image); // first writer wins
}

UnramElement::UnramElement(CtxPtr ctx, DensePoly residue) : ctx_(std::move(ctx)), r_(ctx_->modulus()) {
    if (!residue.modulus()->same(*ctx_->modulus()))
        fail(ErrorCode::Usage, "residue modulus does not match context");
    r_ = residue.degree() >= static_cast<int>(ctx_->n()) ? ctx_->reduce(residue)
                                                        : std::move(residue);
}

std::vector<mpz_class> UnramElement::coeff_vector() const {
    std::vector<mpz_class> out(ctx_->n());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = r_.coeff(i);
    return out;
}

UnramElement element_from_coeffs(const CtxPtr& ctx, const std::vector<mpz_class>& coeffs) {
    return {ctx, DensePoly(coeffs, ctx->modulus())};
}

UnramElement generator(const CtxPtr& ctx) {
    return {ctx, DensePoly::x(ctx->modulus())};
}

UnramElement zero_element(const CtxPtr& ctx) {
    return {ctx, DensePoly(ctx->modulus())};
}

UnramElement one_element(const CtxPtr& ctx) {
    return {ctx, DensePoly::constant(1, ctx->modulus())};
}

UnramElement random_element(const CtxPtr& ctx, std::uint64_t seed) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(seed));
    std::vector<mpz_class> c(ctx->n());
    for (auto& ci : c) ci = rng.get_z_range(ctx->modulus()->pn());
    return element_from_coeffs(ctx, c);
}

CtxPtr find_irreducible_context(const mpz_class& p, unsigned n, unsigned N, std::uint64_t seed) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(seed));
    const unsigned max_attempts = 400 * n + 100;
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<mpz_class> c(n + 1);
        for (unsigned i = 0; i < n; ++i) c[i] = rng.get_z_range(p);
        c[n] = 1;
        try {
            return RingContext::create(p, n, N, DensePoly(c, Modulus::make(p, N)));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotIrreducible) throw;
        }
    }
    fail(ErrorCode::InternalInconsistency, "no irreducible polynomial found");
}

} // namespace padic
