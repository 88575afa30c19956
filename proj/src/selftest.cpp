#include "padic/selftest.hpp"

#include "padic/arith.hpp"
#include "padic/charpoly.hpp"
#include "padic/frobenius.hpp"
#include "padic/newton.hpp"
#include "padic/oracle.hpp"
#include "padic/semilinear.hpp"

namespace padic {

namespace {

struct Reporter {
    std::ostream& out;
    int failures = 0;

    void check(const char* name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    }
};

oracle::NaiveRing naive_of(const CtxPtr& ctx) {
    return {ctx->p(), ctx->n(), ctx->precision(), ctx->phi().coeffs()};
}

bool same_elt(const UnramElement& a, const oracle::NaiveRing::Elt& b) {
    return a.coeff_vector() == b;
}

void run_context_suite(Reporter& rep, const CtxPtr& ctx, std::uint64_t seed) {
    oracle::NaiveRing naive = naive_of(ctx);
    const unsigned n = ctx->n();

    bool mul_ok = true, inv_ok = true, frob_ok = true, minpoly_ok = true, tracenorm_ok = true,
         solve_ok = true, teich_ok = true, newton_ok = true;
    for (int trial = 0; trial < 10; ++trial) {
        UnramElement a = random_element(ctx, seed + 2 * trial);
        UnramElement b = random_element(ctx, seed + 2 * trial + 1);
        auto na = naive.from(a.coeff_vector());
        auto nb = naive.from(b.coeff_vector());

        mul_ok = mul_ok && same_elt(mul(a, b), naive.mul(na, nb)) &&
                 same_elt(add(a, b), naive.add(na, nb)) && same_elt(sub(a, b), naive.sub(na, nb));

        if (element_valuation(a) == 0) {
            inv_ok = inv_ok && same_elt(inv(a), naive.inv(na));
        }
        for (unsigned k = 1; k < n; ++k)
            frob_ok = frob_ok && same_elt(frob_element(a, k), naive.frob(na, k));

        DensePoly mp = minimal_polynomial(a);
        minpoly_ok = minpoly_ok && mp.coeffs() == naive.minpoly(na);

        auto nmp = naive.minpoly(na);
        unsigned d = static_cast<unsigned>(nmp.size() - 1);
        mpz_class tr = -mpz_class(n / d) * nmp[d - 1];
        tracenorm_ok = tracenorm_ok && trace(a).value() == canonical(tr, *ctx->modulus());
        tracenorm_ok = tracenorm_ok && norm(a) == norm_resultant(a);

        if (element_valuation(a) == 0) {
            UnramElement beta = scalar_mul(b, ResidueInt(ctx->p(), ctx->modulus()));
            UnramElement gamma = random_element(ctx, seed + 1000 + trial);
            UnramElement x = solve_artin_schreier(a, beta, gamma);
            solve_ok = solve_ok &&
                       same_elt(x, naive.solve_as(na, naive.from(beta.coeff_vector()),
                                                  naive.from(gamma.coeff_vector())));
        }

        teich_ok = teich_ok && same_elt(teichmuller_lift(a), naive.teich(na));
    }

    // Newton lifting: lift the mod-p conjugate root of phi back to precision N.
    if (n > 1) {
        DensePoly bar = frob_generator_mod_p(ctx, 1).image;
        UnramElement y0{ctx, DensePoly(bar.coeffs(), ctx->modulus())};
        UnramElement y = lift_root(scalar_problem(ctx, ctx->phi(), y0));
        newton_ok = eval_poly_at(scalar_problem(ctx, ctx->phi(), y).coeffs, y).is_zero();
    } else {
        UnramElement c = random_element(ctx, seed + 7);
        NewtonProblem prob = scalar_problem(
            ctx, psub(DensePoly::x(ctx->modulus()),
                      DensePoly(c.residue().coeffs(), ctx->modulus())),
            c);
        newton_ok = lift_root(prob) == c;
    }

    std::string tag = "(p=" + ctx->p().get_str() + ",n=" + std::to_string(n) +
                      ",N=" + std::to_string(ctx->precision()) + ")";
    rep.check(("mul/add/sub vs oracle " + tag).c_str(), mul_ok);
    rep.check(("inv vs oracle " + tag).c_str(), inv_ok);
    rep.check(("frobenius vs oracle " + tag).c_str(), frob_ok);
    rep.check(("minimal polynomial vs oracle " + tag).c_str(), minpoly_ok);
    rep.check(("trace/norm vs oracle " + tag).c_str(), tracenorm_ok);
    rep.check(("artin-schreier vs oracle " + tag).c_str(), solve_ok);
    rep.check(("teichmueller vs oracle " + tag).c_str(), teich_ok);
    rep.check(("newton lifting " + tag).c_str(), newton_ok);
}

void run_kernel_suite(Reporter& rep) {
    ModulusPtr m = Modulus::make(5, 2);

    bool z_ok = zadd(ResidueInt(7, m), ResidueInt(20, m)).value() == 2 &&
                zmul(ResidueInt(7, m), ResidueInt(8, m)).value() == 6 &&
                zinv(ResidueInt(7, m)).value() == 18 && zval(ResidueInt(10, m)) == 1 &&
                zreduce(ResidueInt(24, m), 1).value() == 4 &&
                zneg(ResidueInt(7, m)).value() == 18;
    rep.check("zmod worked values", z_ok);

    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345ul);
    bool pmul_ok = true, divrem_ok = true, comp_ok = true, proj_ok = true, euclid_ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<mpz_class> ac(20), bc(20), hc(8);
        for (auto& c : ac) c = rng.get_z_range(m->pn());
        for (auto& c : bc) c = rng.get_z_range(m->pn());
        for (auto& c : hc) c = rng.get_z_range(m->pn());
        hc.push_back(1);
        DensePoly a(ac, m), b(bc, m), h(hc, m);
        DensePoly prod = pmul(a, b);
        pmul_ok = pmul_ok && prod == pmul_schoolbook(a, b);
        DivRem qr = pdivrem_monic(prod, h);
        divrem_ok = divrem_ok && padd(pmul(qr.quotient, h), qr.remainder) == prod;

        std::vector<mpz_class> fc(7), gc(7), proj(8);
        for (auto& c : fc) c = rng.get_z_range(m->pn());
        for (auto& c : gc) c = rng.get_z_range(m->pn());
        for (auto& c : proj) c = rng.get_z_range(m->pn());
        DensePoly f(fc, m), g(gc, m);
        DensePoly direct(m);
        for (int i = f.degree(); i >= 0; --i)
            direct = padd(pdivrem_monic(pmul(direct, g), h).remainder,
                          DensePoly::constant(f.coeff(i), m));
        comp_ok = comp_ok && modcomp(f, g, h) == direct;
        proj_ok = proj_ok &&
                  power_projection(proj, g, h, 17) == power_projection_reference(proj, g, h, 17);

        ExtEuclidResult ee = ext_euclid(f.truncated(1), g.truncated(1));
        euclid_ok = euclid_ok &&
                    padd(pmul(ee.u, f.truncated(1)), pmul(ee.v, g.truncated(1))) == ee.r;
    }
    rep.check("pmul fast path vs schoolbook", pmul_ok);
    rep.check("monic division reconstruction", divrem_ok);
    rep.check("modular composition vs Horner", comp_ok);
    rep.check("power projection fast vs reference", proj_ok);
    rep.check("extended euclid Bezout identity", euclid_ok);

    // minpoly_from_sequence and resultant worked values.
    bool mseq_ok = minpoly_from_sequence({1, 0, 24, 1}, m) == DensePoly({1, 1, 1}, m);
    rep.check("recurrence minimal polynomial", mseq_ok);
    bool res_ok = resultant(DensePoly({1, 1, 1}, m), DensePoly({22, 1}, m)).value() == 13;
    rep.check("resultant worked value", res_ok);
}

} // namespace

int run_selftest(std::ostream& out) {
    Reporter rep{out};
    run_kernel_suite(rep);
    std::uint64_t seed = 1;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
        for (unsigned n : {1u, 2u, 3u}) {
            for (unsigned N : {1u, 3u}) {
                CtxPtr ctx = find_irreducible_context(p, n, N, 90'000 + p * 100 + n * 10 + N);
                run_context_suite(rep, ctx, seed);
                seed += 10'000;
            }
        }
    }
    // Teichmueller modulus round trip on the worked context.
    {
        ModulusPtr m = Modulus::make(5, 2);
        CtxPtr ctx = RingContext::create(5, 2, 2, DensePoly({1, 1, 1}, m));
        DensePoly f = teichmuller_modulus(ctx);
        rep.check("teichmueller modulus worked value",
                  f == ctx->phi() && is_teichmuller_modulus(f, 5, 2, 2));
    }
    out << (rep.failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return rep.failures;
}

} // namespace padic
