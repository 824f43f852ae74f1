#include "padic_hyper/gamma.hpp"

#include <algorithm>

namespace padic_hyper {

namespace {

constexpr std::uint64_t kDenseLimit = 5'000'000;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// B_0..B_n by the defining recurrence, exact.
std::vector<Rat> bernoulli_row(long n) {
    std::vector<Rat> b(n + 1);
    b[0] = 1;
    for (long m = 1; m <= n; ++m) {
        Rat acc = 0;
        Int binom = 1;  // C(m+1, l)
        for (long l = 0; l < m; ++l) {
            acc += Rat(binom) * b[l];
            binom = binom * (m + 1 - l) / (l + 1);
        }
        b[m] = -acc / Rat(m + 1);
    }
    return b;
}

}  // namespace

Int gamma_int(const Int& n, long p) {
    Int prod = 1;
    for (Int i = 1; i < n; ++i)
        if (i % p != 0) prod *= i;
    if (mpz_odd_p(n.get_mpz_t())) prod = -prod;
    return prod;
}

long reflection_exponent(const Rat& x, long p) {
    const Int r = trunc_digits(x, p, 0);
    return r == 0 ? p : r.get_si();
}

GammaContext::GammaContext(long p, long precision) : p_(p), N_(precision) {
    if (!is_prime(p) || p < 3) throw InvalidPrime("GammaContext requires an odd prime");
    if (N_ < 1) throw PrecisionExhausted("GammaContext precision must be >= 1");
    pN_ = pow_int(p_, N_);

    if (pN_ <= kDenseLimit) {
        dense_mode_ = true;
        const std::uint64_t q = pN_.get_ui();
        const auto size = static_cast<std::size_t>(q);
        dense_.resize(size);
        // Gamma_p(n+1) = -Gamma_p(n) * (n if p∤n else 1)
        std::uint64_t g = 1;
        for (std::uint64_t n = 0; n < size; ++n) {
            dense_[n] = g;
            const std::uint64_t f = (n % static_cast<std::uint64_t>(p_) != 0) ? n : 1;
            g = mulmod_u64(g, f, q);
            g = (g == 0) ? 0 : q - g;  // negate mod q
        }
        return;
    }

    // Analytic mode tables.
    E_ = 2;
    J_ = N_ + 4;
    // guards: log/exp series lose up to v_p(j), v_p(j!) digits; K - loss >= N.
    long exp_loss = 0;
    {
        long s = 0;
        for (long j = 1; j <= N_ + 8; ++j) {
            long v = 0, x = j;
            while (x % p_ == 0) { x /= p_; ++v; }
            s += v;
        }
        exp_loss = s;
    }
    K_ = N_ + std::max<long>(4, exp_loss + 2);
    pK_ = pow_int(p_, K_);
    pKE_ = pow_int(p_, K_ + E_);

    omega_.assign(p_, 0);
    log_teich_.assign(p_, 0);
    log_coef_.assign(p_, {});
    const Int pK1 = pow_int(p_, K_ - 1);
    for (long c = 1; c < p_; ++c) {
        Int w;
        mpz_powm(w.get_mpz_t(), Int(c).get_mpz_t(), pK1.get_mpz_t(), pK_.get_mpz_t());
        omega_[c] = w;
        const Int u = (Int(c) * mod_inverse(w, pK_)) % pK_;
        log_teich_[c] = log_principal_unit(u);
        // (-1)^{j+1} p^j / (j c^j) mod p^K
        auto& row = log_coef_[c];
        row.assign(J_ + 1, 0);
        const Int cinv = mod_inverse(Int(c), pK_);
        Int cpow = 1;
        for (long j = 1; j <= J_; ++j) {
            cpow = (cpow * cinv) % pK_;
            long jv = 0, jr = j;
            while (jr % p_ == 0) { jr /= p_; ++jv; }
            if (j - jv >= K_) { row[j] = 0; continue; }
            Int coef = (pow_int(p_, j - jv) * cpow) % pK_;
            coef = (coef * mod_inverse(Int(jr), pK_)) % pK_;
            if (j % 2 == 0) coef = pK_ - coef;
            row[j] = coef % pK_;
        }
    }

    const auto bern = bernoulli_row(J_ + 1);
    faul_coef_.assign(J_ + 1, {});
    const Int pE = pow_int(p_, E_);
    for (long j = 1; j <= J_; ++j) {
        auto& row = faul_coef_[j];
        row.assign(j + 1, 0);
        Int binom = 1;  // C(j+1, l)
        for (long l = 0; l <= j; ++l) {
            Rat coef = Rat(binom) * bern[l] / Rat(j + 1);  // multiplies n^{j+1-l}
            coef *= Rat(pE);
            if (vp(coef, p_) < 0)
                throw Error("faulhaber coefficient head-room exhausted");
            row[l] = trunc_digits(coef, p_, K_ + E_ - 1);
            binom = binom * (j + 1 - l) / (l + 1);
        }
    }
}

Int GammaContext::log_principal_unit(const Int& u) const {
    Int t = (u - 1) % pK_;
    if (t < 0) t += pK_;
    if (vp(t, p_) < 1 && t != 0) throw Error("log argument not a principal unit");
    // sum (-1)^{j+1} t^j / j; losses from dividing by j stay within the guard.
    Int acc = 0, tpow = 1;
    for (long j = 1; j <= 2 * K_ + 4; ++j) {
        tpow = (tpow * t) % pK_;
        if (tpow == 0) break;
        long jv = 0, jr = j;
        while (jr % p_ == 0) { jr /= p_; ++jv; }
        Int term = tpow;
        if (jv > 0) {
            const Int pe = pow_int(p_, jv);
            if (term % pe != 0) throw Error("inexact division in p-adic log");
            term /= pe;
        }
        term = (term * mod_inverse(Int(jr), pK_)) % pK_;
        if (j % 2 == 1)
            acc = (acc + term) % pK_;
        else
            acc = (acc - term + pK_) % pK_;
    }
    return acc;
}

Int GammaContext::exp_principal(const Int& t) const {
    Int term = 1, acc = 1;
    for (long j = 1; j <= 3 * K_ + 8; ++j) {
        term = (term * t) % pK_;
        long jv = 0, jr = j;
        while (jr % p_ == 0) { jr /= p_; ++jv; }
        if (jv > 0) {
            const Int pe = pow_int(p_, jv);
            if (term % pe != 0) throw Error("inexact division in p-adic exp");
            term /= pe;
        }
        term = (term * mod_inverse(Int(jr), pK_)) % pK_;
        if (term == 0) break;
        acc = (acc + term) % pK_;
    }
    return acc;
}

Int GammaContext::faulhaber_scaled(long j, const std::vector<Int>& npow) const {
    // p^E * sum_{m<n} m^j  mod p^{K+E}
    const auto& row = faul_coef_[j];
    Int acc = 0;
    for (long l = 0; l <= j; ++l) acc += row[l] * npow[j + 1 - l];
    return acc % pKE_;
}

Int GammaContext::gamma_rep_analytic(const Int& n) const {
    const Int pE = pow_int(p_, E_);
    Int log_sum = 0;   // mod p^K
    Int teich = 1;     // mod p^K
    std::vector<Int> npow(J_ + 2);
    for (long c = 1; c < p_; ++c) {
        if (n <= c) break;
        const Int nc = (n - 1 - c) / p_ + 1;  // #{0 < i < n : i ≡ c mod p}
        Int w;
        mpz_powm(w.get_mpz_t(), omega_[c].get_mpz_t(), Int(nc % (p_ - 1)).get_mpz_t(),
                 pK_.get_mpz_t());
        teich = (teich * w) % pK_;
        log_sum = (log_sum + (nc % pK_) * log_teich_[c]) % pK_;
        npow[0] = 1;
        const Int ncr = nc % pKE_;
        for (long l = 1; l <= J_ + 1; ++l) npow[l] = (npow[l - 1] * ncr) % pKE_;
        for (long j = 1; j <= J_; ++j) {
            if (log_coef_[c][j] == 0) continue;
            Int s = faulhaber_scaled(j, npow);
            if (s % pE != 0) throw Error("faulhaber sum not integral");
            s /= pE;
            log_sum = (log_sum + log_coef_[c][j] * s) % pK_;
        }
    }
    Int value = (teich * exp_principal(log_sum)) % pK_;
    if (mpz_odd_p(n.get_mpz_t())) value = pK_ - value;
    return value % pN_;
}

Int GammaContext::gamma_rep(const Int& n) const {
    if (n < 0 || n >= pN_) throw Error("gamma_rep: representative out of range");
    if (dense_mode_) return Int(dense_[static_cast<std::size_t>(n.get_ui())]);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
    }
    Int v = n < 4096 ? gamma_rep_direct(n) : gamma_rep_analytic(n);
    {
        std::lock_guard<std::mutex> lk(mu_);
        cache_.emplace(n, v);
    }
    return v;
}

Int GammaContext::gamma_rep_direct(const Int& n) const {
    Int prod = 1;
    for (Int i = 1; i < n; ++i)
        if (i % p_ != 0) prod = (prod * i) % pN_;
    if (mpz_odd_p(n.get_mpz_t())) prod = pN_ - (prod % pN_);
    return prod % pN_;
}

PadicValue GammaContext::gamma(const Rat& x) const {
    const Int rep = trunc_digits(x, p_, N_ - 1);
    return PadicValue::from_integer(gamma_rep(rep), p_, N_);
}

std::vector<PadicValue> g_extract(const Rat& a, int t, long r, const GammaContext& ctx) {
    const long p = ctx.prime();
    if (ctx.precision() < (t + 1) * r)
        throw PrecisionExhausted("g_extract: context precision below (t+1)r");
    const PadicValue ga = ctx.gamma(a);
    const long cap = (t + 1) * r;
    const Int pr = pow_int(p, r);

    std::vector<PadicValue> y(t);
    for (int m = 1; m <= t; ++m) {
        PadicValue ratio = ctx.gamma(a + Rat(Int(m) * pr)) / ga;
        y[m - 1] = (ratio - PadicValue::one(p, ctx.precision())).truncate_known(cap);
    }

    // V[m][k] = m^k, unknowns X_k = G_k p^{kr}/k!; Gaussian elimination with
    // exact rational row operations.
    std::vector<std::vector<Rat>> M(t, std::vector<Rat>(t));
    for (int m = 1; m <= t; ++m) {
        Rat mk = 1;
        for (int k = 1; k <= t; ++k) {
            mk *= m;
            M[m - 1][k - 1] = mk;
        }
    }
    for (int col = 0; col < t; ++col) {
        int piv = -1;
        for (int row = col; row < t; ++row)
            if (M[row][col] != 0 && vp(M[row][col], p) == 0) { piv = row; break; }
        if (piv < 0) throw SingularSystem("g_extract: no unit pivot");
        std::swap(M[col], M[piv]);
        std::swap(y[col], y[piv]);
        for (int row = col + 1; row < t; ++row) {
            if (M[row][col] == 0) continue;
            const Rat f = M[row][col] / M[col][col];
            for (int k = col; k < t; ++k) M[row][k] -= f * M[col][k];
            y[row] = y[row] - y[col].mul_rational(f);
        }
    }
    std::vector<PadicValue> X(t, PadicValue::zero(p));
    for (int row = t - 1; row >= 0; --row) {
        PadicValue acc = y[row];
        for (int k = row + 1; k < t; ++k) acc = acc - X[k].mul_rational(M[row][k]);
        X[row] = acc.mul_rational(Rat(1) / M[row][row]);
    }
    std::vector<PadicValue> G(t, PadicValue::zero(p));
    Int fact = 1;
    for (int k = 1; k <= t; ++k) {
        fact *= k;
        G[k - 1] = X[k - 1].mul_rational(Rat(fact)).mul_pow_p(-k * r).truncate_known((t + 1 - k) * r);
    }
    return G;
}

GApprox g1_approx(const Rat& a, long r, const GammaContext& ctx) {
    auto G = g_extract(a, 1, r, ctx);
    return GApprox{a, 1, G[0], r};
}

GApprox g2_approx(const Rat& a, long r, const GammaContext& ctx) {
    auto G = g_extract(a, 2, r, ctx);
    return GApprox{a, 2, G[1], r};
}

PadicValue gamma_taylor_residual(const Rat& a, const Int& m, long r, int t,
                                 const GammaContext& ctx) {
    const long p = ctx.prime();
    const Int shift = m * pow_int(p, r);
    PadicValue lhs = ctx.gamma(a + Rat(shift)) / ctx.gamma(a);
    PadicValue series = PadicValue::one(p, ctx.precision());
    if (t > 0) {
        auto G = g_extract(a, t, r, ctx);
        const PadicValue mp = PadicValue::from_rational(Rat(shift), p, ctx.precision());
        PadicValue power = PadicValue::one(p, ctx.precision());
        Int fact = 1;
        for (int k = 1; k <= t; ++k) {
            power = power * mp;
            fact *= k;
            series = series + G[k - 1].mul_rational(Rat(1) / Rat(fact)) * power;
        }
    }
    return (lhs - series).truncate_known((t + 1) * r);
}

}  // namespace padic_hyper
