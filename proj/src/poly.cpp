#include "padic/poly.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace padic {

namespace {

void normalize(std::vector<mpz_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void check_same(const DensePoly& a, const DensePoly& b) {
    if (!a.modulus()->same(*b.modulus())) fail(ErrorCode::Usage, "modulus mismatch");
}

const mpz_class kZero = 0;

} // namespace

DensePoly::DensePoly(std::vector<mpz_class> coeffs, ModulusPtr m)
    : m_(std::move(m)), c_(std::move(coeffs)) {
    for (auto& c : c_) c = canonical(c, *m_);
    normalize(c_);
}

DensePoly DensePoly::constant(const mpz_class& c, const ModulusPtr& m) {
    return DensePoly({c}, m);
}

DensePoly DensePoly::x(const ModulusPtr& m) {
    return DensePoly({0, 1}, m);
}

const mpz_class& DensePoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

DensePoly DensePoly::truncated(unsigned precision) const {
    return DensePoly(c_, m_->truncated(precision));
}

DensePoly DensePoly::promoted(const ModulusPtr& m) const {
    if (m->p() != m_->p() || m->precision() < m_->precision())
        fail(ErrorCode::Usage, "bad promotion target");
    return DensePoly(c_, m);
}

DensePoly padd(const DensePoly& a, const DensePoly& b) {
    check_same(a, b);
    std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return DensePoly(std::move(c), a.modulus());
}

DensePoly psub(const DensePoly& a, const DensePoly& b) {
    check_same(a, b);
    std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return DensePoly(std::move(c), a.modulus());
}

DensePoly pneg(const DensePoly& a) {
    std::vector<mpz_class> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeff(i);
    return DensePoly(std::move(c), a.modulus());
}

DensePoly pscale(const DensePoly& a, const mpz_class& s) {
    std::vector<mpz_class> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) * s;
    return DensePoly(std::move(c), a.modulus());
}

DensePoly derivative(const DensePoly& a) {
    if (a.degree() < 1) return DensePoly(a.modulus());
    std::vector<mpz_class> c(a.coeffs().size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i + 1) * (i + 1);
    return DensePoly(std::move(c), a.modulus());
}

DensePoly pmul_schoolbook(const DensePoly& a, const DensePoly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return DensePoly(a.modulus());
    std::vector<mpz_class> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return DensePoly(std::move(c), a.modulus());
}

namespace {

// Kronecker substitution: pack coefficients into slots of `bits` bits, take
// one big-integer product, unpack. Exact because all slots stay below 2^bits.
DensePoly pmul_kronecker(const DensePoly& a, const DensePoly& b) {
    const std::size_t la = a.coeffs().size(), lb = b.coeffs().size();
    const std::size_t terms = std::min(la, lb);
    std::size_t bits = 2 * mpz_sizeinbase(a.modulus()->pn().get_mpz_t(), 2);
    std::size_t t = 1;
    while (t < terms) {
        t <<= 1;
        ++bits;
    }
    auto pack = [&](const std::vector<mpz_class>& c) {
        mpz_class acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            acc <<= bits;
            acc += c[i];
        }
        return acc;
    };
    mpz_class prod = pack(a.coeffs()) * pack(b.coeffs());
    mpz_class mask = (mpz_class(1) << bits) - 1;
    std::vector<mpz_class> c(la + lb - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = prod & mask;
        prod >>= bits;
    }
    return DensePoly(std::move(c), a.modulus());
}

} // namespace

DensePoly pmul(const DensePoly& a, const DensePoly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return DensePoly(a.modulus());
    if (std::min(a.coeffs().size(), b.coeffs().size()) < kPmulKroneckerCutoff)
        return pmul_schoolbook(a, b);
    return pmul_kronecker(a, b);
}

DivRem pdivrem_monic(const DensePoly& f, const DensePoly& h) {
    check_same(f, h);
    if (!h.is_monic()) fail(ErrorCode::NotMonic, "divisor is not monic");
    const int dh = h.degree();
    if (f.degree() < dh) return {DensePoly(f.modulus()), f};
    const auto& m = *f.modulus();
    std::vector<mpz_class> r(f.coeffs());
    std::vector<mpz_class> q(f.degree() - dh + 1);
    for (int i = f.degree(); i >= dh; --i) {
        mpz_class c = canonical(r[i], m);
        q[i - dh] = c;
        if (c == 0) continue;
        for (int j = 0; j < dh; ++j) r[i - dh + j] -= c * h.coeff(j);
        r[i] = 0;
    }
    r.resize(dh);
    return {DensePoly(std::move(q), f.modulus()), DensePoly(std::move(r), f.modulus())};
}

namespace {

DensePoly reverse_poly(const DensePoly& f, std::size_t len) {
    std::vector<mpz_class> c(len);
    for (std::size_t i = 0; i < len; ++i) c[i] = f.coeff(len - 1 - i);
    return DensePoly(std::move(c), f.modulus());
}

DensePoly trunc_terms(const DensePoly& f, std::size_t k) {
    std::vector<mpz_class> c(f.coeffs().begin(),
                             f.coeffs().begin() + std::min(k, f.coeffs().size()));
    return DensePoly(std::move(c), f.modulus());
}

// Inverse power series of f (constant term 1) to `terms` coefficients.
DensePoly series_inverse(const DensePoly& f, std::size_t terms) {
    DensePoly w = DensePoly::constant(1, f.modulus());
    std::size_t k = 1;
    while (k < terms) {
        k = std::min(2 * k, terms);
        DensePoly fw = trunc_terms(pmul(trunc_terms(f, k), w), k);
        DensePoly two = DensePoly::constant(2, f.modulus());
        w = trunc_terms(pmul(w, psub(two, fw)), k);
    }
    return w;
}

} // namespace

MonicReciprocal::MonicReciprocal(DensePoly h, int max_input_degree)
    : h_(std::move(h)), recip_(h_.modulus()) {
    if (!h_.is_monic()) fail(ErrorCode::NotMonic, "divisor is not monic");
    if (max_input_degree < 0) max_input_degree = 2 * h_.degree() - 2;
    terms_ = static_cast<std::size_t>(
        std::max(1, max_input_degree - h_.degree() + 1));
    recip_ = series_inverse(reverse_poly(h_, h_.coeffs().size()), terms_);
}

DivRem MonicReciprocal::divrem(const DensePoly& f) const {
    const int dh = h_.degree();
    const int df = f.degree();
    if (df < dh) return {DensePoly(f.modulus()), f};
    const std::size_t qlen = static_cast<std::size_t>(df - dh + 1);
    if (qlen > terms_ || df - dh < kDivremNewtonCutoff) return pdivrem_monic(f, h_);
    DensePoly qrev = trunc_terms(pmul(reverse_poly(f, f.coeffs().size()),
                                      trunc_terms(recip_, qlen)),
                                 qlen);
    std::vector<mpz_class> qc(qlen);
    for (std::size_t i = 0; i < qlen; ++i) qc[i] = qrev.coeff(qlen - 1 - i);
    DensePoly q(std::move(qc), f.modulus());
    DensePoly r = trunc_terms(psub(f, pmul(q, h_)), static_cast<std::size_t>(dh));
    return {std::move(q), std::move(r)};
}

DensePoly MonicReciprocal::rem(const DensePoly& f) const {
    return divrem(f).remainder;
}

DensePoly modcomp(const DensePoly& f, const DensePoly& g, const DensePoly& h,
                  const MonicReciprocal* recip) {
    check_same(f, g);
    check_same(f, h);
    if (!h.is_monic()) fail(ErrorCode::NotMonic, "composition modulus not monic");
    if (h.degree() == 0) return DensePoly(f.modulus());
    std::optional<MonicReciprocal> local_recip;
    if (!recip) local_recip.emplace(h);
    const MonicReciprocal& R = recip ? *recip : *local_recip;
    DensePoly gr = g.degree() >= h.degree() ? R.rem(g) : g;

    if (f.degree() <= kModcompHornerCutoff) {
        DensePoly acc(f.modulus());
        for (int i = f.degree(); i >= 0; --i) {
            acc = R.rem(pmul(acc, gr));
            acc = padd(acc, DensePoly::constant(f.coeff(i), f.modulus()));
        }
        return acc;
    }

    // Baby-step/giant-step, block size ceil(sqrt(deg f + 1)).
    const std::size_t df = static_cast<std::size_t>(f.degree());
    const std::size_t t =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(df + 1))));
    std::vector<DensePoly> baby;
    baby.reserve(t);
    baby.push_back(DensePoly::constant(1, f.modulus()));
    for (std::size_t i = 1; i < t; ++i) baby.push_back(R.rem(pmul(baby.back(), gr)));
    DensePoly giant = R.rem(pmul(baby.back(), gr)); // g^t

    const std::size_t blocks = (df + 1 + t - 1) / t;
    DensePoly acc(f.modulus());
    for (std::size_t j = blocks; j-- > 0;) {
        DensePoly block(f.modulus());
        for (std::size_t i = 0; i < t && j * t + i <= df; ++i)
            block = padd(block, pscale(baby[i], f.coeff(j * t + i)));
        acc = padd(R.rem(pmul(acc, giant)), block);
    }
    return acc;
}

DensePoly powmod(const DensePoly& base, const mpz_class& exp, const MonicReciprocal& h) {
    DensePoly result = DensePoly::constant(1, base.modulus());
    DensePoly sq = h.rem(base);
    for (std::size_t bit = 0, nbits = mpz_sizeinbase(exp.get_mpz_t(), 2); bit < nbits; ++bit) {
        if (mpz_tstbit(exp.get_mpz_t(), bit)) result = h.rem(pmul(result, sq));
        if (bit + 1 < nbits) sq = h.rem(pmul(sq, sq));
    }
    return result;
}

namespace {

void check_projection_args(const std::vector<mpz_class>& proj, const DensePoly& g,
                           const DensePoly& h) {
    if (!h.is_monic()) fail(ErrorCode::NotMonic, "projection modulus not monic");
    if (proj.size() != static_cast<std::size_t>(h.degree()))
        fail(ErrorCode::Usage, "projection vector length mismatch");
    if (g.degree() >= h.degree()) fail(ErrorCode::Usage, "projection argument degree too large");
}

mpz_class dot(const std::vector<mpz_class>& proj, const DensePoly& w, const Modulus& m) {
    mpz_class acc = 0;
    for (std::size_t i = 0; i < w.coeffs().size(); ++i) acc += proj[i] * w.coeffs()[i];
    return canonical(acc, m);
}

} // namespace

std::vector<mpz_class> power_projection_reference(const std::vector<mpz_class>& proj,
                                                  const DensePoly& g, const DensePoly& h,
                                                  std::size_t count) {
    check_projection_args(proj, g, h);
    MonicReciprocal R(h);
    std::vector<mpz_class> out;
    out.reserve(count);
    DensePoly w = DensePoly::constant(1, g.modulus());
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(dot(proj, w, *g.modulus()));
        if (i + 1 < count) w = R.rem(pmul(w, g));
    }
    return out;
}

std::vector<mpz_class> power_projection(const std::vector<mpz_class>& proj,
                                        const DensePoly& g, const DensePoly& h,
                                        std::size_t count) {
    check_projection_args(proj, g, h);
    if (count < kProjectionBsgsCutoff) return power_projection_reference(proj, g, h, count);
    const auto& m = *g.modulus();
    const std::size_t d = static_cast<std::size_t>(h.degree());
    MonicReciprocal R(h);
    const std::size_t t =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(count))));
    std::vector<DensePoly> baby;
    baby.push_back(DensePoly::constant(1, g.modulus()));
    for (std::size_t i = 1; i < t; ++i) baby.push_back(R.rem(pmul(baby.back(), g)));
    DensePoly giant = R.rem(pmul(baby.back(), g)); // g^t

    // Columns of the multiply-by-g^t matrix, for the transposed giant step.
    std::vector<DensePoly> cols;
    cols.reserve(d);
    cols.push_back(giant);
    for (std::size_t i = 1; i < d; ++i) {
        // multiply by X mod h
        std::vector<mpz_class> c(cols.back().coeffs().size() + 1);
        for (std::size_t j = 0; j < cols.back().coeffs().size(); ++j)
            c[j + 1] = cols.back().coeffs()[j];
        DensePoly shifted(std::move(c), g.modulus());
        cols.push_back(R.rem(shifted));
    }

    std::vector<mpz_class> out;
    out.reserve(count);
    std::vector<mpz_class> ell = proj;
    for (std::size_t i = 0; i < ell.size(); ++i) ell[i] = canonical(ell[i], m);
    std::size_t produced = 0;
    while (produced < count) {
        for (std::size_t i = 0; i < t && produced < count; ++i, ++produced)
            out.push_back(dot(ell, baby[i], m));
        if (produced < count) {
            std::vector<mpz_class> next(d);
            for (std::size_t i = 0; i < d; ++i) next[i] = dot(ell, cols[i], m);
            ell = std::move(next);
        }
    }
    return out;
}

namespace {

// Division by a divisor with unit leading coefficient (scales through the
// monic routine).
DivRem pdivrem_unitlc(const DensePoly& f, const DensePoly& g) {
    if (g.is_monic()) return pdivrem_monic(f, g);
    const auto& m = *g.modulus();
    mpz_class lc = g.leading();
    if (valuation(lc, m) != 0)
        fail(ErrorCode::ZeroDivisorPivot, "non-unit pivot in Euclidean descent");
    mpz_class lci = inverse(lc, m);
    DivRem qr = pdivrem_monic(f, pscale(g, lci));
    return {pscale(qr.quotient, lci), qr.remainder};
}

} // namespace

DensePoly minpoly_from_sequence(const std::vector<mpz_class>& s, const ModulusPtr& m) {
    if (s.empty() || s.size() % 2 != 0)
        fail(ErrorCode::Usage, "sequence length must be 2n");
    const std::size_t n = s.size() / 2;
    std::vector<mpz_class> fc(2 * n + 1);
    fc[2 * n] = 1;
    DensePoly f(std::move(fc), m); // X^{2n}
    std::vector<mpz_class> gc(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) gc[2 * n - 1 - i] = s[i];
    DensePoly g(std::move(gc), m);

    DensePoly r_prev = f, r_cur = g;
    DensePoly t_prev(m), t_cur = DensePoly::constant(1, m);
    while (r_cur.degree() >= static_cast<int>(n)) {
        DivRem qr = pdivrem_unitlc(r_prev, r_cur);
        DensePoly t_next = psub(t_prev, pmul(qr.quotient, t_cur));
        r_prev = r_cur;
        r_cur = qr.remainder;
        t_prev = t_cur;
        t_cur = t_next;
    }
    if (t_cur.is_zero()) fail(ErrorCode::InternalInconsistency, "empty recurrence cofactor");
    mpz_class lc = t_cur.leading();
    if (valuation(lc, *m) != 0)
        fail(ErrorCode::ZeroDivisorPivot, "non-unit leading coefficient in recurrence");
    return pscale(t_cur, inverse(lc, *m));
}

namespace {

// Pseudo-remainder over Z: lc(B)^(degA-degB+1) * A reduced by B.
std::vector<mpz_class> int_prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    auto norm = [](std::vector<mpz_class>& v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
    };
    norm(a);
    long e = static_cast<long>(a.size()) - 1 - static_cast<long>(db) + 1;
    while (!(a.size() == 1 && a[0] == 0) && a.size() - 1 >= db) {
        mpz_class lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= lead * b[j];
        norm(a);
        --e;
    }
    // Degree can drop by more than one per step; keep the lc(B)^(delta+1)
    // scaling exact.
    for (; e > 0; --e)
        for (auto& c : a) c *= lb;
    return a;
}

} // namespace

ResidueInt resultant(const DensePoly& f, const DensePoly& g) {
    check_same(f, g);
    if (!f.is_monic()) fail(ErrorCode::NotMonic, "resultant requires monic first argument");
    const auto& mp = f.modulus();
    const int df = f.degree();
    if (df == 0) return {1, mp};
    // Res(f, g) = prod of g over the roots of monic f, so g may be reduced
    // mod f up front; this also establishes deg g < deg f for the descent.
    if (g.degree() >= df) return resultant(f, pdivrem_monic(g, f).remainder);
    if (g.is_zero()) return {0, mp};
    if (g.degree() == 0) {
        mpz_class r;
        mpz_powm_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), static_cast<unsigned long>(df),
                    mp->pn().get_mpz_t());
        return {r, mp};
    }

    // Subresultant descent over the lifted integers (canonical reps), exact.
    std::vector<mpz_class> A(f.coeffs()), B(g.coeffs());
    int sign = 1;
    mpz_class gc = 1, hc = 1;
    while (B.size() - 1 > 0) {
        long da = static_cast<long>(A.size()) - 1;
        long db = static_cast<long>(B.size()) - 1;
        long delta = da - db;
        if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
        std::vector<mpz_class> R = int_prem(A, B);
        A = std::move(B);
        mpz_class divisor = gc;
        for (long i = 0; i < delta; ++i) divisor *= hc;
        for (auto& c : R) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
            c = q;
        }
        B = std::move(R);
        if (B.size() == 1 && B[0] == 0) break;
        gc = A.back();
        if (delta > 0) {
            mpz_class gpow = 1;
            for (long i = 0; i < delta; ++i) gpow *= gc;
            mpz_class hpow = 1;
            for (long i = 0; i < delta - 1; ++i) hpow *= hc;
            mpz_class nh;
            mpz_divexact(nh.get_mpz_t(), gpow.get_mpz_t(), hpow.get_mpz_t());
            hc = nh;
        }
    }
    if (B.size() == 1 && B[0] == 0) return {0, mp};
    long da = static_cast<long>(A.size()) - 1;
    mpz_class num = 1;
    for (long i = 0; i < da; ++i) num *= B[0];
    mpz_class den = 1;
    for (long i = 0; i < da - 1; ++i) den *= hc;
    mpz_class res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sign < 0) res = -res;
    return {res, mp};
}

ExtEuclidResult ext_euclid(const DensePoly& f, const DensePoly& g) {
    check_same(f, g);
    DensePoly r_prev = f, r_cur = g;
    const auto& m = f.modulus();
    DensePoly u_prev = DensePoly::constant(1, m), u_cur(m);
    DensePoly v_prev(m), v_cur = DensePoly::constant(1, m);
    while (!r_cur.is_zero()) {
        DivRem qr = pdivrem_unitlc(r_prev, r_cur);
        DensePoly u_next = psub(u_prev, pmul(qr.quotient, u_cur));
        DensePoly v_next = psub(v_prev, pmul(qr.quotient, v_cur));
        r_prev = r_cur;
        r_cur = qr.remainder;
        u_prev = u_cur;
        u_cur = u_next;
        v_prev = v_cur;
        v_cur = v_next;
    }
    return {r_prev, u_prev, v_prev};
}

DensePoly poly_gcd_field(DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
        DensePoly r = pdivrem_unitlc(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return pscale(a, inverse(a.leading(), *a.modulus()));
}

} // namespace padic
