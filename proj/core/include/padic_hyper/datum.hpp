#pragma once

#include <array>
#include <string>
#include <vector>

#include "padic_hyper/rational.hpp"

namespace padic_hyper {

// One 4F3 datum: alpha = {r1, 1-r1, r2, 1-r2}, beta = {1, 1, q, 2-q}.
struct HyperDatum {
    Rat r1, r2, q;
    std::array<Rat, 4> alpha;
    std::array<Rat, 4> beta;
    bool canonical = false;  // one of the six tuples under study

    std::string id() const;

    static HyperDatum make(const Rat& r1, const Rat& r2, const Rat& q);
    // Parses "r1,r2,q" with rationals given as "n/d".
    static HyperDatum parse(const std::string& text);
    static const std::vector<HyperDatum>& canonical_six();

    // Least common multiple of all parameter denominators.
    Int denominator_lcm() const;
    bool valid_prime(long p) const;
};

// The datum relabelled at a fixed prime so the dashes are nondecreasing,
// with the first p-adic digits t_j = [-r_j]_0 and u_j = [-q_j]_0 attached.
struct OrderedDatum {
    HyperDatum hd;
    long p = 0;
    std::array<Rat, 4> r, q;            // relabelled parameters
    std::array<Rat, 4> r_dash, q_dash;  // their dashes
    std::array<long, 4> t{}, u{};
    std::vector<std::string> warnings;  // structure violations (non-canonical data only)

    std::string id() const { return hd.id(); }
};

// Relabels per the dash ordering and checks the digit-sum and interlacing
// identities.  Throws InvalidPrime for p < 7, composite p, or p dividing a
// parameter denominator; throws StructureViolation when an identity fails
// for a canonical datum (violations on user data become warnings).
OrderedDatum order_datum(const HyperDatum& hd, long p);

// alpha_i = {[-r]_i : r in alpha} and beta_i = {[-q]_i : q in beta},
// as sorted multisets.
std::pair<std::vector<Int>, std::vector<Int>> alpha_beta_truncations(const HyperDatum& hd,
                                                                     long p, long i);

// Sorted alpha_i, beta_i as t^{(i)}, u^{(i)}; verifies the interlacing chain
// p^i <= u1 < t1 <= t2 = t3 <= t4 < u2 < u3 = u4 = p^{i+1}-1.
std::pair<std::array<Int, 4>, std::array<Int, 4>> ordered_jumps(const HyperDatum& hd,
                                                                long p, long i);

}  // namespace padic_hyper
