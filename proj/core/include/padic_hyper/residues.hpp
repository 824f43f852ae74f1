#pragma once

#include <vector>

#include "padic_hyper/congruence.hpp"
#include "padic_hyper/datum.hpp"

namespace padic_hyper {

// Dense polynomial over Q, ascending degree.
struct RationalPoly {
    std::vector<Rat> c;

    long degree() const { return static_cast<long>(c.size()) - 1; }
    void trim();
    Rat eval(const Rat& x) const;
    RationalPoly derivative() const;
    RationalPoly operator*(const RationalPoly& o) const;
    // Multiplies by (x - root).
    RationalPoly mul_linear_root(const Rat& root) const;
    // Divides by (x - root); throws UnexpectedPole when the remainder is
    // nonzero.  O(deg).
    RationalPoly deflate(const Rat& root) const;
    // First `count` Taylor coefficients at x0 (synthetic division).
    std::vector<Rat> taylor_at(const Rat& x0, int count) const;

    static RationalPoly one();
    static RationalPoly monic_linear(const Rat& root);  // x - root
};

// R_i(t) = prod_j (-t+1-p r_j')_{t_j} * (-t+q_1)_{u_1+1}
//          / [ (-t+1-p q_1')_{u_1+1} * (t)_p^{i+1} ]
std::pair<RationalPoly, RationalPoly> build_R(const OrderedDatum& d, int i);

// Partial fractions of R_i.  Integer poles -k (k = 0..p-1) of order i+1
// carry coefficients A_k (top order), E_k (order 2, only for i=2) and B_k
// (the residue).  The shifted simple poles sit at k - p q_1' (k = 1..u_1+1)
// with residue D_k, i.e. the D-term is D_k/(t - k + p q_1'); with that
// orientation the residue sum theorem reads  sum B_k + sum D_k = 0.
struct PartialFractionDecomp {
    int order = 0;  // i+1
    long p = 0;
    Rat q1_dash;
    std::vector<Rat> A, E, B;  // k = 0..p-1 (E empty for order 2)
    std::vector<Rat> D;        // k = 1..u_1+1, stored at index k-1

    Rat eval(const Rat& t) const;  // reassembled value at a sample point
};

PartialFractionDecomp decompose(const RationalPoly& num, const RationalPoly& den,
                                const OrderedDatum& d, int i);

// Exact identity R_i = decomposition, proven by evaluating the difference at
// more sample points than its numerator degree bound.
bool reassembly_check(const PartialFractionDecomp& pf, const RationalPoly& num,
                      const RationalPoly& den, const OrderedDatum& d);

struct DkReport {
    int i = 0;
    long min_valuation = 0;        // min over k of v_p(D_k)
    bool bound_holds = false;      // min_valuation >= 3-i
    std::vector<Rat> delta;        // D_k / p^{3-i}
};
DkReport dk_valuation_check(const PartialFractionDecomp& pf, int i, long p);

struct AkReport {
    int i = 0;
    bool valuations_match = false;  // v_p(A_k) = i + v_p(H(k)) for all k
    bool unit_pm_one = false;       // A_k/(p^i H(k)) ≡ ±1 mod p with one global sign
    int sign = 0;                   // the empirical global sign
    // B_k^{(1)} + A_k^{(1)} (J_1(k) + nu-corrections) ≡ 0 to the stated modulus
    bool b_congruence = false;
    long b_congruence_checked = 0;  // how many k passed (p when all)
};
AkReport ak_leading_check(const PartialFractionDecomp& pf, const OrderedDatum& d, int i,
                          const JValues& J);

struct ResidueCReport {
    int i = 0;
    bool residue_sum_zero = false;  // sum B + sum D = 0 exactly
    Int scaled_sum;                 // sign * p^i * sum B_k mod p^3
    Int c_value;                    // C_i mod p^3
    bool matches_c = false;
};
ResidueCReport residue_to_C_check(const OrderedDatum& d, int i, const JValues& J);

}  // namespace padic_hyper
