#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "padic_hyper/padic.hpp"
#include "padic_hyper/rational.hpp"

namespace padic_hyper {

// Exact integer value (-1)^n prod_{0<i<n, p∤i} i.  Linear in n; meant for
// small arguments (identity tests, the classical Gamma bridge).
Int gamma_int(const Int& n, long p);

// x0 in {1,...,p} with x - x0 ≡ 0 mod p; equals p exactly when [x]_0 = 0.
long reflection_exponent(const Rat& x, long p);

// Morita's p-adic Gamma at fixed prime and precision.  The value at x in
// Z_p is Gamma_p of the integer representative of x mod p^N, which the
// continuity of Gamma_p makes well defined mod p^N.
//
// Evaluation strategy: a dense sliding-product table when p^N is small
// enough to enumerate, otherwise an analytic route splitting the partial
// product into Teichmuller and principal-unit parts, with the principal
// logs summed in closed form via Bernoulli/Faulhaber polynomials.  Both
// routes agree with gamma_int by construction and by test.
//
// Thread safety: all tables are built at construction; queries only touch
// a memo map guarded by a mutex.
class GammaContext {
public:
    GammaContext(long p, long precision);

    long prime() const { return p_; }
    long precision() const { return N_; }

    PadicValue gamma(const Rat& x) const;
    // Argument already reduced to its representative in [0, p^N).
    Int gamma_rep(const Int& n) const;

    // Reference path: the literal product, reduced mod p^N.  O(n); used by
    // tests to pin the fast paths.
    Int gamma_rep_direct(const Int& n) const;

private:
    Int gamma_rep_analytic(const Int& n) const;
    Int log_principal_unit(const Int& u) const;  // u ≡ 1 mod p, result mod p^K
    Int exp_principal(const Int& t) const;       // v_p(t) ≥ 1, result mod p^K
    Int faulhaber_scaled(long j, const std::vector<Int>& npow) const;

    long p_ = 0;
    long N_ = 0;   // requested precision
    long K_ = 0;   // internal working precision (N + guards)
    long J_ = 0;   // log-series cutoff
    long E_ = 0;   // p-valuation head-room for Faulhaber denominators
    Int pN_, pK_, pKE_;

    bool dense_mode_ = false;
    std::vector<std::uint64_t> dense_;  // Gamma_p(n) mod p^N, n in [0, p^N)

    std::vector<Int> omega_;       // Teichmuller lift of c, mod p^K
    std::vector<Int> log_teich_;   // log(c / omega(c)) mod p^K
    std::vector<std::vector<Int>> log_coef_;   // [c][j]: (-1)^{j+1} p^j/(j c^j) mod p^K
    std::vector<std::vector<Int>> faul_coef_;  // [j][l]: p^E * C(j+1,l) B_l/(j+1) mod p^{K+E}

    mutable std::mutex mu_;
    mutable std::map<Int, Int> cache_;
};

// A finite-difference approximation to G_k = Gamma_p^{(k)}/Gamma_p at a base
// point, valid mod p^guaranteed only.
struct GApprox {
    Rat base;
    int order = 0;
    PadicValue value;
    long guaranteed = 0;
};

// Solves the shift system Gamma_p(a + m p^r)/Gamma_p(a) = sum_k G_k/k! (m p^r)^k
// at m = 1..t; returns G_1..G_t with G_k determined mod p^{(t+1-k)r}.
// Requires ctx.precision() >= (t+1) r.
std::vector<PadicValue> g_extract(const Rat& a, int t, long r, const GammaContext& ctx);

GApprox g1_approx(const Rat& a, long r, const GammaContext& ctx);
GApprox g2_approx(const Rat& a, long r, const GammaContext& ctx);

// Gamma_p(a + m p^r)/Gamma_p(a) minus its degree-t Taylor truncation; the
// result must vanish mod p^{(t+1)r}.
PadicValue gamma_taylor_residual(const Rat& a, const Int& m, long r, int t, const GammaContext& ctx);

}  // namespace padic_hyper
