#pragma once

// Brute-force reference computations, deliberately independent of the
// library's evaluation paths.

#include <padic_hyper/datum.hpp>
#include <padic_hyper/rational.hpp>

namespace oracles {

using padic_hyper::Int;
using padic_hyper::Rat;

// Least j in [0, p^{i+1}) with p^{i+1} | (num + den*j); this is [-num/den]_i.
inline Int neg_trunc_scan(const Int& num, const Int& den, long p, long i) {
    const Int mod = padic_hyper::pow_int(p, i + 1);
    for (Int j = 0; j < mod; ++j)
        if ((num + den * j) % mod == 0) return j;
    throw std::runtime_error("no digit-scan solution (den not coprime to p?)");
}

// [a]_i for rational a in Z_p by scanning.
inline Int trunc_scan(const Rat& a, long p, long i) {
    return neg_trunc_scan(-a.get_num(), a.get_den(), p, i);
}

// v_p((a)_k) by multiplying the factors one by one.
inline long pochhammer_valuation_brute(const Rat& a, long k, long p) {
    long v = 0;
    for (long i = 0; i < k; ++i) {
        const Rat f = a + i;
        if (f == 0) return padic_hyper::kInfValuation;
        v += padic_hyper::vp(f, p);
    }
    return v;
}

// (a)_k as an exact rational.
inline Rat pochhammer_exact(const Rat& a, long k) {
    Rat r = 1;
    for (long i = 0; i < k; ++i) r *= a + i;
    return r;
}

// Exact rational H(k) for the relabelled datum.
inline Rat hyper_exact(const padic_hyper::OrderedDatum& d, long k) {
    Rat num = 1, den = 1;
    for (int j = 0; j < 4; ++j) {
        num *= pochhammer_exact(d.r[j], k);
        den *= pochhammer_exact(d.q[j], k);
    }
    return num / den;
}

}  // namespace oracles
