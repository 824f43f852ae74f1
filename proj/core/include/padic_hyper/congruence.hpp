#pragma once

#include <vector>

#include "padic_hyper/datum.hpp"
#include "padic_hyper/gamma.hpp"
#include "padic_hyper/padic.hpp"
#include "padic_hyper/series.hpp"

namespace padic_hyper {

// nu(a, x) = -floor((x-a)/(p-1)) on 0 <= a, x <= p-1: 0 if a <= x, 1 if x < a.
inline int nu(long a, long x) { return a <= x ? 0 : 1; }

struct NuTable {
    std::array<std::vector<int>, 4> at_t;  // at_t[j][a] = nu(a, t_j)
    std::array<std::vector<int>, 4> at_u;

    static NuTable build(const OrderedDatum& d);
};

// Lambda(a+bp) = prod_j (1+b/r_j')^{nu(a,t_j)} (1+b/q_j')^{-nu(a,u_j)}, exact.
// Throws PoleAtB when a factor in the denominator vanishes exactly.
Rat lambda_factor(const OrderedDatum& d, long a, const Int& b);
// (1 + b/q1') * Lambda(a+bp); this is the quantity whose p-integrality
// drives the inner-sum case split.
Rat lambda_with_prefactor(const OrderedDatum& d, long a, const Int& b);
// The same quantity from the six-range closed form; kept separate so the
// two readings can be compared index by index.
Rat lambda_table_entry(const OrderedDatum& d, long a, const Int& b);
// Lambda with the (1+b/q2') factor removed on a >= u2 (the modified kernel
// used when b ≡ -q2' mod p).
Rat lambda_modified(const OrderedDatum& d, long a, const Int& b);

// J_1(a), J_2(a) for a in [0, p-1], determined mod p^guaranteed.
struct JValues {
    long p = 0;
    long guaranteed = 0;
    std::vector<PadicValue> J1, J2;
};

// Builds both J arrays from G_1/G_2 finite differences at the eight shifted
// parameters; the base values are propagated across a by the Gamma_p
// functional equation, so only O(1) Gamma evaluations are needed.
JValues j_values(const OrderedDatum& d, const GammaContext& ctx, long r = 3);

// G_1/G_2 at x + a for a = 0..count-1 via the functional-equation recursion
// (exposed for tests and for the residue-side checks).
struct GTrack {
    std::vector<PadicValue> G1, G2;
};
GTrack g_track(const Rat& x, long count, const GammaContext& ctx, long r = 3);

struct InnerSumReport {
    Int b;
    bool modified_branch = false;  // b ≡ -q2' (mod p)
    PadicValue inner;              // I(b)
    PadicValue inner_modified;     // I~(b) when the branch applies, else = inner
    PadicValue c_poly;             // C1 b + C2 b^2
    bool equiv_mod_p3 = false;     // (modified) inner sum ≡ C1 b + C2 b^2 mod p^3
    bool scaled_vanishes = false;  // p^s H(b) I(b) ≡ 0 mod p^3 (s from caller)
};

InnerSumReport inner_sum(const OrderedDatum& d, const Int& b, const JValues& J);

struct CCoeffs {
    PadicValue C1, C2, C3;
};

// The three-range sums over a in [0,u1], (u1,t1], (t1,t2].
CCoeffs c_coefficients(const OrderedDatum& d, const JValues& J);

struct TheoremReport {
    long s = 0;
    Int lhs;  // p^{s+1} F_{s+1} mod p^3
    Int rhs;  // p^s F_s * p F_1 mod p^3
    bool holds = false;
};

// p^{s+1} F_{s+1} ≡ p^s F_s · p F_1 (mod p^3), both sides reported.
TheoremReport check_theorem(const OrderedDatum& d, long s, long digits = 0);

}  // namespace padic_hyper
