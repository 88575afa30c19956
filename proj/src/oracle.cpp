#include "padic/oracle.hpp"

namespace padic::oracle {

namespace {

mpz_class mod(const mpz_class& v, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

NaiveRing::NaiveRing(mpz_class p, unsigned n, unsigned N, std::vector<mpz_class> phi)
    : p_(std::move(p)), n_(n), N_(N), phi_(std::move(phi)) {
    mpz_pow_ui(pN_.get_mpz_t(), p_.get_mpz_t(), N_);
    if (phi_.size() != n_ + 1 || phi_[n_] != 1)
        fail(ErrorCode::Usage, "naive ring needs a monic phi of degree n");
    for (auto& c : phi_) c = mod(c, pN_);
    phi_[n_] = 1;
}

mpz_class NaiveRing::cardinality() const {
    mpz_class c;
    mpz_pow_ui(c.get_mpz_t(), pN_.get_mpz_t(), n_);
    return c;
}

NaiveRing::Elt NaiveRing::reduce_poly(std::vector<mpz_class> c) const {
    for (std::size_t i = c.size(); i-- > n_;) {
        // subtract c[i] * X^{i-n} * phi
        mpz_class lead = mod(c[i], pN_);
        for (unsigned j = 0; j < n_; ++j) c[i - n_ + j] -= lead * phi_[j];
        c[i] = 0;
    }
    c.resize(n_);
    for (auto& ci : c) ci = mod(ci, pN_);
    return c;
}

NaiveRing::Elt NaiveRing::from(const std::vector<mpz_class>& coeffs) const {
    std::vector<mpz_class> c = coeffs;
    if (c.size() < n_) c.resize(n_, 0);
    return reduce_poly(std::move(c));
}

NaiveRing::Elt NaiveRing::one() const {
    Elt e(n_, 0);
    e[0] = 1;
    return e;
}

NaiveRing::Elt NaiveRing::element_at(const mpz_class& index) const {
    Elt e(n_, 0);
    mpz_class rest = index;
    for (unsigned i = 0; i < n_; ++i) {
        e[i] = mod(rest, pN_);
        rest /= pN_;
    }
    return e;
}

bool NaiveRing::is_zero(const Elt& a) const {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

unsigned NaiveRing::valuation(const Elt& a) const {
    unsigned best = N_;
    for (const auto& c : a) {
        mpz_class x = mod(c, pN_);
        if (x == 0) continue;
        unsigned v = 0;
        while (v < N_ && mpz_divisible_p(x.get_mpz_t(), p_.get_mpz_t())) {
            x /= p_;
            ++v;
        }
        best = std::min(best, v);
    }
    return best;
}

NaiveRing::Elt NaiveRing::add(const Elt& a, const Elt& b) const {
    Elt c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = mod(a[i] + b[i], pN_);
    return c;
}

NaiveRing::Elt NaiveRing::sub(const Elt& a, const Elt& b) const {
    Elt c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = mod(a[i] - b[i], pN_);
    return c;
}

NaiveRing::Elt NaiveRing::neg(const Elt& a) const {
    Elt c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = mod(-a[i], pN_);
    return c;
}

NaiveRing::Elt NaiveRing::mul(const Elt& a, const Elt& b) const {
    std::vector<mpz_class> c(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) c[i + j] += a[i] * b[j];
    return reduce_poly(std::move(c));
}

NaiveRing::Elt NaiveRing::pow(const Elt& a, const mpz_class& e) const {
    Elt result = one();
    Elt sq = a;
    const std::size_t nbits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t bit = 0; bit < nbits; ++bit) {
        if (mpz_tstbit(e.get_mpz_t(), bit)) result = mul(result, sq);
        if (bit + 1 < nbits) sq = mul(sq, sq);
    }
    return result;
}

NaiveRing::Elt NaiveRing::mod_p(const Elt& a) const {
    Elt c(n_);
    for (unsigned i = 0; i < n_; ++i) c[i] = mod(a[i], p_);
    return c;
}

NaiveRing::Elt NaiveRing::inv(const Elt& a) const {
    if (valuation(a) > 0) fail(ErrorCode::NonUnit, "naive: not a unit", valuation(a));
    NaiveRing bar(p_, n_, 1, phi_);
    // Fermat inverse in the residue field.
    mpz_class card;
    mpz_pow_ui(card.get_mpz_t(), p_.get_mpz_t(), n_);
    Elt g = bar.pow(bar.from(a), card - 2);
    // Linear digit-by-digit lifting to precision N.
    mpz_class pj = 1;
    for (unsigned j = 1; j < N_; ++j) {
        pj *= p_;
        Elt e = sub(one(), mul(a, g));
        Elt c(n_);
        for (unsigned i = 0; i < n_; ++i) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), e[i].get_mpz_t(), pj.get_mpz_t());
            c[i] = mod(q, p_);
        }
        Elt t = bar.mul(c, bar.from(g));
        for (unsigned i = 0; i < n_; ++i) g[i] = mod(g[i] + pj * t[i], pN_);
    }
    return g;
}

NaiveRing::Elt NaiveRing::frob_generator(unsigned k) const {
    Elt x = from({0, 1});
    if (k == 0 || n_ == 1) return x;
    // Mod-p image: literal x^{p^k} by square-and-multiply.
    NaiveRing bar(p_, n_, 1, phi_);
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), p_.get_mpz_t(), k);
    Elt w = bar.pow(bar.from({0, 1}), e);
    // Digit-by-digit Hensel lifting of this simple root of phi.
    std::vector<mpz_class> dphi(n_);
    for (unsigned i = 1; i <= n_; ++i) dphi[i - 1] = phi_[i] * i;
    auto eval = [&](const std::vector<mpz_class>& poly, const Elt& at) {
        Elt acc = zero();
        for (std::size_t i = poly.size(); i-- > 0;) {
            acc = mul(acc, at);
            acc[0] = mod(acc[0] + poly[i], pN_);
        }
        return acc;
    };
    Elt wfull(n_, 0);
    for (unsigned i = 0; i < n_; ++i) wfull[i] = i < w.size() ? w[i] : 0;
    Elt dinv_bar = bar.inv(bar.from(eval(dphi, wfull)));
    mpz_class pj = 1;
    for (unsigned j = 1; j < N_; ++j) {
        pj *= p_;
        Elt r = eval(phi_, wfull);
        Elt c(n_);
        for (unsigned i = 0; i < n_; ++i) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), r[i].get_mpz_t(), pj.get_mpz_t());
            c[i] = mod(q, p_);
        }
        Elt t = bar.mul(c, dinv_bar);
        for (unsigned i = 0; i < n_; ++i) wfull[i] = mod(wfull[i] - pj * t[i], pN_);
    }
    return wfull;
}

NaiveRing::Elt NaiveRing::frob(const Elt& a, unsigned k) const {
    k %= n_;
    if (k == 0) return a;
    Elt w = frob_generator(k);
    Elt acc = zero();
    for (std::size_t i = n_; i-- > 0;) {
        acc = mul(acc, w);
        acc[0] = mod(acc[0] + a[i], pN_);
    }
    return acc;
}

NaiveRing::Elt NaiveRing::solve_as(const Elt& alpha, const Elt& beta, const Elt& gamma) const {
    if (valuation(alpha) != 0) fail(ErrorCode::NonUnit, "naive: alpha not a unit");
    if (valuation(beta) < 1) fail(ErrorCode::PreconditionFailed, "naive: beta not divisible by p");
    const mpz_class card = cardinality();
    if (card <= 10000) {
        Elt w1 = frob_generator(1);
        auto apply_frob = [&](const Elt& v) {
            Elt acc = zero();
            for (std::size_t i = n_; i-- > 0;) {
                acc = mul(acc, w1);
                acc[0] = mod(acc[0] + v[i], pN_);
            }
            return acc;
        };
        for (mpz_class idx = 0; idx < card; ++idx) {
            Elt x = element_at(idx);
            Elt lhs = add(mul(alpha, apply_frob(x)), add(mul(beta, x), gamma));
            if (is_zero(lhs)) return x;
        }
        fail(ErrorCode::InternalInconsistency, "naive: no Artin-Schreier solution found");
    }
    // Fixed point X <- sigma^{-1}(-(beta X + gamma)/alpha), contractive since
    // beta == 0 mod p.
    Elt ainv = inv(alpha);
    Elt x = zero();
    for (unsigned i = 0; i < N_ + 2; ++i)
        x = frob(neg(mul(add(mul(beta, x), gamma), ainv)), n_ - 1);
    return x;
}

NaiveRing::Elt NaiveRing::teich(const Elt& a) const {
    mpz_class q;
    mpz_pow_ui(q.get_mpz_t(), p_.get_mpz_t(), n_);
    if (cardinality() <= 10000) {
        Elt target = mod_p(a);
        for (mpz_class idx = 0; idx < cardinality(); ++idx) {
            Elt t = element_at(idx);
            if (mod_p(t) != target) continue;
            if (pow(t, q) == t) return t;
        }
        fail(ErrorCode::InternalInconsistency, "naive: no Teichmueller lift found");
    }
    // Each iteration of T <- T^{p^n} at least doubles the correct precision.
    Elt t = a;
    for (unsigned i = 0; i <= N_; ++i) t = pow(t, q);
    return t;
}

std::vector<mpz_class> NaiveRing::minpoly(const Elt& a) const {
    std::vector<Elt> orbit{a};
    for (;;) {
        Elt next = frob(orbit.back(), 1);
        if (next == a) break;
        orbit.push_back(std::move(next));
        if (orbit.size() > n_) fail(ErrorCode::InternalInconsistency, "naive: orbit exceeds n");
    }
    std::vector<Elt> coeffs{one()};
    for (const auto& conj : orbit) {
        std::vector<Elt> next(coeffs.size() + 1, zero());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = add(next[i + 1], coeffs[i]);
            next[i] = sub(next[i], mul(coeffs[i], conj));
        }
        coeffs = std::move(next);
    }
    std::vector<mpz_class> out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (unsigned j = 1; j < n_; ++j)
            if (coeffs[i][j] != 0)
                fail(ErrorCode::InternalInconsistency, "naive: non-constant minpoly coefficient");
        out[i] = coeffs[i][0];
    }
    return out;
}

std::vector<mpz_class> NaiveRing::minpoly_mod_p(const Elt& a) const {
    NaiveRing bar(p_, n_, 1, phi_);
    Elt ab = bar.from(mod_p(a));
    // Powers 1, a, a^2, ... as rows; find the first linear dependence mod p.
    std::vector<Elt> powers{bar.one()};
    for (unsigned d = 1; d <= n_; ++d) {
        powers.push_back(bar.mul(powers.back(), ab));
        // Solve sum_{i<d} c_i a^i = -a^d by Gaussian elimination mod p.
        std::vector<std::vector<mpz_class>> m(n_, std::vector<mpz_class>(d + 1, 0));
        for (unsigned row = 0; row < n_; ++row) {
            for (unsigned col = 0; col < d; ++col) m[row][col] = powers[col][row];
            m[row][d] = mod(-powers[d][row], p_);
        }
        unsigned rank = 0;
        std::vector<int> pivot_col(d, -1);
        for (unsigned col = 0; col < d && rank < n_; ++col) {
            unsigned sel = rank;
            while (sel < n_ && mod(m[sel][col], p_) == 0) ++sel;
            if (sel == n_) continue;
            std::swap(m[rank], m[sel]);
            mpz_class piv_inv;
            mpz_class piv = mod(m[rank][col], p_);
            mpz_invert(piv_inv.get_mpz_t(), piv.get_mpz_t(), p_.get_mpz_t());
            for (auto& v : m[rank]) v = mod(v * piv_inv, p_);
            for (unsigned row = 0; row < n_; ++row) {
                if (row == rank) continue;
                mpz_class f = mod(m[row][col], p_);
                if (f == 0) continue;
                for (unsigned cc = 0; cc <= d; ++cc) m[row][cc] = mod(m[row][cc] - f * m[rank][cc], p_);
            }
            pivot_col[col] = static_cast<int>(rank);
            ++rank;
        }
        bool consistent = true;
        for (unsigned row = rank; row < n_; ++row)
            if (mod(m[row][d], p_) != 0) consistent = false;
        if (!consistent) continue;
        std::vector<mpz_class> c(d + 1, 0);
        c[d] = 1;
        for (unsigned col = 0; col < d; ++col)
            if (pivot_col[col] >= 0) c[col] = mod(m[pivot_col[col]][d], p_);
        return c;
    }
    fail(ErrorCode::InternalInconsistency, "naive: no minimal polynomial mod p");
}

} // namespace padic::oracle
