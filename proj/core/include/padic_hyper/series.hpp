#pragma once

#include <string>
#include <vector>

#include "padic_hyper/datum.hpp"
#include "padic_hyper/padic.hpp"

namespace padic_hyper {

// v_p((a)_k) = sum_{i>=1} floor((k + p^i - [-a]_{i-1} - 1)/p^i), for a in Z_p.
long pochhammer_valuation(const Rat& a, const Int& k, long p);

// H(k+1)/H(k) = prod_j (r_j + k)/(q_j + k), exact.
Rat hyper_ratio(const OrderedDatum& d, long k);

// Incremental H(k): H(0) = 1, H(k+1)/H(k) = prod_j (r_j+k)/(q_j+k) with the
// two unit entries of beta contributing (1+k)^2 downstairs.  Exact in
// (valuation, unit mod p^digits); only additions of streams lose digits.
class CoefficientStream {
public:
    CoefficientStream(const OrderedDatum& d, long digits);

    long index() const { return k_; }
    const PadicValue& current() const { return h_; }
    void advance();

private:
    const OrderedDatum d_;
    long digits_;
    long k_ = 0;
    PadicValue h_;
};

PadicValue hyper_coefficient(const OrderedDatum& d, const Int& k, long digits);
// Exact rational H(k); oracle for small k.
Rat hyper_coefficient_exact(const OrderedDatum& d, long k);

// F_s = sum_{k=0}^{p^s-1} H(k); F_0 = 1 by the truncation convention.
PadicValue truncated_sum(const OrderedDatum& d, long s, long digits);
Rat truncated_sum_exact(const OrderedDatum& d, long s);

// Working precision used by the congruence checks: final statements are mod
// p^3 after multiplying by p^{s+1}, and H(k) dips to valuation -s.
inline long working_digits(long s) { return s + 6; }

// k -> v_p(H(k)) on [0, p^s), piecewise constant.
struct ValuationProfile {
    long p = 0;
    long s = 0;
    std::vector<Int> breakpoints;  // starts of pieces; breakpoints[0] = 0
    std::vector<long> values;

    long value_at(const Int& k) const;
    Int domain_size() const { return pow_int(p, s); }
    // CSV with header "k,vp", one row per k (meant for the Figure-style export).
    std::string to_csv() const;
};

// Built by the level induction: the base profile on [0,p) plus correction
// steps at the level-i jump indices for i = 1..s-1.
ValuationProfile valuation_profile(const OrderedDatum& d, long s);
// Built pointwise from the rising-factorial valuation formula.
ValuationProfile valuation_profile_direct(const OrderedDatum& d, long s);

}  // namespace padic_hyper
