#pragma once

#include <string>

#include "padic_hyper/rational.hpp"

namespace padic_hyper {

// A p-adic number represented as p^val * unit, with `unit` a p-adic unit
// known modulo p^prec.  The value as a whole is known modulo p^{val+prec}.
//
// Exact zero has val = kInfValuation.  A value whose known digits all
// cancelled (e.g. in a sum) is kept as an "inexact zero": prec = 0 and val
// holding the exponent up to which the value is known to vanish.
class PadicValue {
public:
    PadicValue() = default;

    static PadicValue zero(long p);
    static PadicValue one(long p, long digits);
    static PadicValue from_rational(const Rat& x, long p, long digits);
    static PadicValue from_integer(const Int& x, long p, long digits);
    // p^val * unit with unit a p-adic unit mod p^digits.
    static PadicValue from_parts(long p, long val, Int unit, long digits);

    long prime() const { return p_; }
    bool exact_zero() const { return val_ == kInfValuation; }
    // True when no nonzero digit is known (exact zero or full cancellation).
    bool zero_to_precision() const { return exact_zero() || prec_ == 0; }
    long valuation() const;
    // Number of significant digits of the unit part.
    long precision() const { return prec_; }
    // The value is determined modulo p^{known_exponent()}.
    long known_exponent() const;
    const Int& unit() const;

    PadicValue operator-() const;
    PadicValue operator+(const PadicValue& o) const;
    PadicValue operator-(const PadicValue& o) const;
    PadicValue operator*(const PadicValue& o) const;
    PadicValue operator/(const PadicValue& o) const;
    PadicValue inverse() const;

    // Exact rescaling: multiplies by a rational, adjusting the valuation by
    // vp(r) without losing digits.
    PadicValue mul_rational(const Rat& r) const;
    PadicValue mul_pow_p(long e) const;

    // Caps the known exponent at p^N (used when a congruence is only valid
    // to a stated modulus).
    PadicValue truncate_known(long N) const;

    // Reduced residue in [0, p^N).  Requires the value to be integral and
    // determined mod p^N; throws NonIntegralError / PrecisionExhausted.
    Int residue_mod(long N) const;

    bool is_zero_mod(long N) const;
    bool congruent_mod(const PadicValue& o, long N) const;

    std::string str() const;

private:
    PadicValue(long p, long val, Int unit, long prec)
        : p_(p), val_(val), unit_(std::move(unit)), prec_(prec) {}
    void normalize();

    long p_ = 0;
    long val_ = kInfValuation;
    Int unit_ = 0;
    long prec_ = 0;
};

}  // namespace padic_hyper
