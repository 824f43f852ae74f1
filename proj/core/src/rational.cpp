#include "padic_hyper/rational.hpp"

namespace padic_hyper {

Rat make_rat(long num, long den) {
    if (den == 0) throw FormatError("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw FormatError("empty rational");
    const auto slash = text.find('/');
    try {
        Int num(slash == std::string::npos ? text : text.substr(0, slash), 10);
        Int den = slash == std::string::npos ? Int(1) : Int(text.substr(slash + 1), 10);
        if (den == 0) throw FormatError("zero denominator in '" + text + "'");
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw FormatError("cannot parse rational '" + text + "'");
    }
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int pow_int(long base, long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DivisionByZero("no inverse of " + a.get_str() + " mod " + m.get_str());
    return r;
}

long vp(const Int& x, long p) {
    if (x == 0) return kInfValuation;
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), Int(p).get_mpz_t()));
}

long vp(const Rat& x, long p) {
    if (x == 0) return kInfValuation;
    return vp(x.get_num(), p) - vp(x.get_den(), p);
}

bool p_integral(const Rat& x, long p) {
    return x == 0 || mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

Int trunc_digits(const Rat& a, long p, long i) {
    if (!p_integral(a, p))
        throw NonIntegralError("trunc_digits: argument has negative valuation at p=" + std::to_string(p));
    const Int modulus = pow_int(p, i + 1);
    Int r = a.get_num() % modulus;
    if (a.get_den() != 1) r = (r * mod_inverse(a.get_den(), modulus)) % modulus;
    if (r < 0) r += modulus;
    return r;
}

Int trunc_neg_by_lambda(const Int& a, const Int& b, long p, long i) {
    const Int pi = pow_int(p, i);
    Int lambda;
    if (b == 1) {
        lambda = 1;  // least positive residue convention
    } else {
        // least positive residue of a * p^{-i} mod b, in [1, b]
        lambda = ((a % b) * mod_inverse(pi % b, b)) % b;
        lambda = ((lambda % b) + b) % b;
        if (lambda == 0) lambda = b;
    }
    Int r = (lambda * pi - a) / b;
    // lambda is only fixed mod b, so r is fixed mod p^i; reduce to [0, p^i).
    r %= pi;
    if (r < 0) r += pi;
    return r;
}

Rat dwork_dash(const Rat& a, long p) {
    if (!p_integral(a, p))
        throw NonIntegralError("dwork_dash: argument has negative valuation at p=" + std::to_string(p));
    Rat r = (a + trunc_digits(-a, p, 0)) / p;
    r.canonicalize();
    return r;
}

}  // namespace padic_hyper
