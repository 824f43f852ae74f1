#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>

#include "padic_hyper/errors.hpp"

namespace padic_hyper {

using Int = mpz_class;
using Rat = mpq_class;

// Sentinel valuation for zero.  Kept well away from LONG_MAX so that a sum of
// two finite valuations can never collide with it.
inline constexpr long kInfValuation = std::numeric_limits<long>::max() / 4;

Rat make_rat(long num, long den);

// Parses "n/d" or "n".  Throws FormatError on junk or zero denominator.
Rat parse_rat(const std::string& text);

bool is_prime(long n);

Int pow_int(long base, long exp);

// Inverse of a modulo m; requires gcd(a, m) = 1.
Int mod_inverse(const Int& a, const Int& m);

long vp(const Int& x, long p);
long vp(const Rat& x, long p);

// True iff vp(x, p) >= 0, i.e. x lies in Z_p.
bool p_integral(const Rat& x, long p);

// [a]_i: the unique integer in [0, p^{i+1}) congruent to a mod p^{i+1}.
// Throws NonIntegralError when a has a p in its denominator.
Int trunc_digits(const Rat& a, long p, long i);

// [-a/b]_{i-1} computed as (lambda_i p^i - a)/b where lambda_i is the least
// positive residue of a p^{-i} mod b.  Requires gcd(a,b) = 1, b >= 1, p ∤ b,
// i >= 1.
Int trunc_neg_by_lambda(const Int& a, const Int& b, long p, long i);

// Dwork dash a' = (a + [-a]_0)/p, again in Z_p.
Rat dwork_dash(const Rat& a, long p);

}  // namespace padic_hyper
