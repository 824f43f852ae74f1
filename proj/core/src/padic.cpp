#include "padic_hyper/padic.hpp"

#include <sstream>

namespace padic_hyper {

PadicValue PadicValue::zero(long p) { return PadicValue(p, kInfValuation, 0, 0); }

PadicValue PadicValue::one(long p, long digits) { return PadicValue(p, 0, 1, digits); }

PadicValue PadicValue::from_parts(long p, long val, Int unit, long digits) {
    if (digits < 1) throw PrecisionExhausted("from_parts: no significant digits");
    PadicValue v(p, val, std::move(unit), digits);
    v.normalize();
    return v;
}

PadicValue PadicValue::from_integer(const Int& x, long p, long digits) {
    return from_rational(Rat(x), p, digits);
}

PadicValue PadicValue::from_rational(const Rat& x, long p, long digits) {
    if (x == 0) return zero(p);
    if (digits < 1) throw PrecisionExhausted("from_rational: no significant digits");
    const long v = vp(x, p);
    Int num = x.get_num(), den = x.get_den();
    mpz_remove(num.get_mpz_t(), num.get_mpz_t(), Int(p).get_mpz_t());
    mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Int(p).get_mpz_t());
    const Int modulus = pow_int(p, digits);
    Int u = num % modulus;
    if (den != 1) u = (u * mod_inverse(den % modulus, modulus)) % modulus;
    if (u < 0) u += modulus;
    return PadicValue(p, v, u, digits);
}

// Re-establish: 0 <= unit < p^prec, p ∤ unit (moving stray p factors into
// the valuation at the cost of precision), collapse to inexact zero if all
// digits vanish.
void PadicValue::normalize() {
    if (exact_zero()) return;
    const Int modulus = pow_int(p_, prec_);
    unit_ %= modulus;
    if (unit_ < 0) unit_ += modulus;
    if (unit_ == 0) {
        val_ += prec_;
        prec_ = 0;
        return;
    }
    Int stripped;
    const long e = static_cast<long>(
        mpz_remove(stripped.get_mpz_t(), unit_.get_mpz_t(), Int(p_).get_mpz_t()));
    if (e > 0) {
        val_ += e;
        prec_ -= e;
        unit_ = stripped % pow_int(p_, prec_);
    }
}

long PadicValue::valuation() const {
    if (exact_zero()) return kInfValuation;
    if (prec_ == 0)
        throw PrecisionExhausted("valuation of a value that vanishes to working precision");
    return val_;
}

long PadicValue::known_exponent() const {
    if (exact_zero()) return kInfValuation;
    return val_ + prec_;
}

const Int& PadicValue::unit() const {
    if (zero_to_precision()) throw PrecisionExhausted("unit of a zero value");
    return unit_;
}

PadicValue PadicValue::operator-() const {
    if (zero_to_precision()) return *this;
    PadicValue r(p_, val_, pow_int(p_, prec_) - unit_, prec_);
    return r;
}

PadicValue PadicValue::operator+(const PadicValue& o) const {
    if (p_ != o.p_ && !exact_zero() && !o.exact_zero())
        throw Error("prime mismatch in p-adic addition");
    if (exact_zero()) return o;
    if (o.exact_zero()) return *this;
    const long known = std::min(known_exponent(), o.known_exponent());
    const long v = std::min(val_, o.val_);
    if (v >= known) return PadicValue(p_, known, 0, 0);
    const Int modulus = pow_int(p_, known - v);
    Int sum = 0;
    if (prec_ > 0) sum += unit_ * pow_int(p_, val_ - v);
    if (o.prec_ > 0) sum += o.unit_ * pow_int(p_, o.val_ - v);
    sum %= modulus;
    if (sum < 0) sum += modulus;
    PadicValue r(p_, v, sum, known - v);
    r.normalize();
    return r;
}

PadicValue PadicValue::operator-(const PadicValue& o) const { return *this + (-o); }

PadicValue PadicValue::operator*(const PadicValue& o) const {
    if (p_ != o.p_ && !exact_zero() && !o.exact_zero())
        throw Error("prime mismatch in p-adic multiplication");
    if (exact_zero() || o.exact_zero()) return zero(exact_zero() ? o.p_ : p_);
    const long prec = std::min(prec_, o.prec_);
    if (prec == 0) return PadicValue(p_, val_ + o.val_, 0, 0);
    Int u = (unit_ * o.unit_) % pow_int(p_, prec);
    return PadicValue(p_, val_ + o.val_, std::move(u), prec);
}

PadicValue PadicValue::inverse() const {
    if (exact_zero()) throw DivisionByZero("inverse of zero");
    if (prec_ == 0) throw PrecisionExhausted("inverse of a value with no known digits");
    const Int modulus = pow_int(p_, prec_);
    return PadicValue(p_, -val_, mod_inverse(unit_, modulus), prec_);
}

PadicValue PadicValue::operator/(const PadicValue& o) const { return *this * o.inverse(); }

PadicValue PadicValue::mul_rational(const Rat& r) const {
    if (r == 0) return zero(p_);
    if (zero_to_precision()) {
        if (exact_zero()) return *this;
        return PadicValue(p_, val_ + vp(r, p_), 0, 0);
    }
    PadicValue f = from_rational(r, p_, prec_);
    return *this * f;
}

PadicValue PadicValue::mul_pow_p(long e) const {
    if (exact_zero()) return *this;
    return PadicValue(p_, val_ + e, unit_, prec_);
}

PadicValue PadicValue::truncate_known(long N) const {
    if (exact_zero() || known_exponent() <= N) return *this;
    if (val_ >= N) return PadicValue(p_, N, 0, 0);
    PadicValue r(p_, val_, unit_ % pow_int(p_, N - val_), N - val_);
    r.normalize();
    return r;
}

Int PadicValue::residue_mod(long N) const {
    if (exact_zero()) return 0;
    if (val_ >= N) return 0;
    if (val_ < 0)
        throw NonIntegralError("residue_mod: value has negative valuation " + std::to_string(val_));
    if (known_exponent() < N)
        throw PrecisionExhausted("residue_mod: value known mod p^" + std::to_string(known_exponent()) +
                                 " but p^" + std::to_string(N) + " requested");
    return (unit_ * pow_int(p_, val_)) % pow_int(p_, N);
}

bool PadicValue::is_zero_mod(long N) const {
    if (exact_zero()) return true;
    if (val_ >= N) return true;
    if (known_exponent() < N)
        throw PrecisionExhausted("is_zero_mod: insufficient precision");
    return false;
}

bool PadicValue::congruent_mod(const PadicValue& o, long N) const {
    return (*this - o).is_zero_mod(N);
}

std::string PadicValue::str() const {
    std::ostringstream os;
    if (exact_zero()) {
        os << "0 (exact, p=" << p_ << ")";
    } else if (prec_ == 0) {
        os << "O(" << p_ << "^" << val_ << ")";
    } else {
        os << unit_.get_str() << "*" << p_ << "^" << val_ << " + O(" << p_ << "^"
           << known_exponent() << ")";
    }
    return os.str();
}

}  // namespace padic_hyper
