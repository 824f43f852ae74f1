#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <padic_hyper/padic.hpp>
#include <padic_hyper/rational.hpp>

#include "oracles.hpp"

using namespace padic_hyper;

TEST_CASE("vp on rationals") {
    CHECK(vp(make_rat(49, 3), 7) == 2);
    CHECK(vp(make_rat(3, 14), 7) == -1);
    CHECK(vp(Rat(0), 7) == kInfValuation);
    std::mt19937 rng(1);
    for (int i = 0; i < 200; ++i) {
        const long p = std::array<long, 3>{7, 11, 13}[rng() % 3];
        Rat x = make_rat(static_cast<long>(rng() % 20000) - 10000, 1 + rng() % 400);
        Rat y = make_rat(static_cast<long>(rng() % 20000) - 10000, 1 + rng() % 400);
        if (x == 0 || y == 0) continue;
        CHECK(vp(x * y, p) == vp(x, p) + vp(y, p));
        if (x + y != 0) {
            const long vs = vp(x + y, p);
            CHECK(vs >= std::min(vp(x, p), vp(y, p)));
            if (vp(x, p) != vp(y, p)) CHECK(vs == std::min(vp(x, p), vp(y, p)));
        }
    }
}

TEST_CASE("trunc_digits") {
    CHECK(trunc_digits(make_rat(-1, 2), 7, 0) == 3);
    CHECK(trunc_digits(Rat(5), 7, 1) == 5);
    for (long p : {7L, 11L, 13L})
        for (long i : {0L, 1L, 2L})
            CHECK(trunc_digits(Rat(-1), p, i) == pow_int(p, i + 1) - 1);
    CHECK_THROWS_AS(trunc_digits(make_rat(1, 7), 7, 0), NonIntegralError);
}

TEST_CASE("trunc_neg_by_lambda matches digit scan") {
    CHECK(trunc_neg_by_lambda(1, 2, 7, 1) == 3);
    CHECK(trunc_neg_by_lambda(4, 3, 7, 1) == 1);
    for (long p : {7L, 11L})
        for (long i : {1L, 2L}) CHECK(trunc_neg_by_lambda(1, 1, p, i) == pow_int(p, i) - 1);

    std::mt19937 rng(2);
    int done = 0;
    while (done < 200) {
        const long p = std::array<long, 3>{7, 11, 13}[rng() % 3];
        const long i = 1 + rng() % 2;
        Int a = static_cast<long>(rng() % 2000) - 1000;
        Int b = 1 + rng() % 50;
        if (b % p == 0) continue;
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1) continue;
        CHECK(trunc_neg_by_lambda(a, b, p, i) == oracles::neg_trunc_scan(a, b, p, i - 1));
        ++done;
    }
}

TEST_CASE("dwork dash") {
    for (long p : {7L, 11L, 13L, 97L}) {
        CHECK(dwork_dash(make_rat(1, 2), p) == make_rat(1, 2));
        CHECK(dwork_dash(Rat(1), p) == 1);
    }
    CHECK(dwork_dash(make_rat(4, 3), 7) == make_rat(1, 3));

    // 1 - a' = (1 - a)'
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const long p = std::array<long, 3>{7, 11, 13}[rng() % 3];
        long den = 1 + rng() % 60;
        while (den % p == 0) den = 1 + rng() % 60;
        const Rat a = make_rat(static_cast<long>(rng() % 400) - 200, den);
        CHECK(1 - dwork_dash(a, p) == dwork_dash(1 - a, p));
    }
}

TEST_CASE("padic value arithmetic") {
    const long p = 7;
    auto mk = [&](long val, long unit, long prec) {
        return PadicValue::from_parts(p, val, Int(unit), prec);
    };
    SUBCASE("additions and multiplications") {
        CHECK((mk(1, 1, 4) + mk(1, 1, 4)).residue_mod(3) == 2 * 7);
        const PadicValue prod = mk(-1, 3, 3) * mk(2, 5, 3);
        CHECK(prod.valuation() == 1);
        CHECK(prod.unit() == 15);
    }
    SUBCASE("full cancellation is a flagged zero") {
        const long M = 4;
        const PadicValue z = mk(0, 1, M) + mk(0, pow_int(p, M).get_si() - 1, M);
        CHECK(z.zero_to_precision());
        CHECK(!z.exact_zero());
        CHECK(z.is_zero_mod(M));
        CHECK_THROWS_AS(z.is_zero_mod(M + 1), PrecisionExhausted);
        CHECK_THROWS_AS(z.unit(), PrecisionExhausted);
    }
    SUBCASE("division") {
        const PadicValue q = mk(2, 3, 5) / mk(1, 5, 5);
        CHECK(q.valuation() == 1);
        CHECK((q * mk(1, 5, 5)).congruent_mod(mk(2, 3, 5), 5));
        CHECK_THROWS_AS(mk(0, 1, 3) / PadicValue::zero(p), DivisionByZero);
    }
    SUBCASE("negative valuation round trips") {
        const Rat x = make_rat(3, 14);  // v_7 = -1
        const PadicValue v = PadicValue::from_rational(x, 7, 5);
        CHECK(v.valuation() == -1);
        CHECK(v.mul_pow_p(1).residue_mod(4) == trunc_digits(7 * x, 7, 3));
    }
}

TEST_CASE("rational embedding round trip") {
    std::mt19937 rng(4);
    for (int i = 0; i < 150; ++i) {
        const long p = std::array<long, 3>{7, 11, 13}[rng() % 3];
        const long M = 5;
        long den = 1 + rng() % 50;
        while (den % p == 0) den = 1 + rng() % 50;
        Rat x = make_rat(static_cast<long>(rng() % 4000) - 2000, den);
        if (x == 0 || vp(x, p) < -M || vp(x, p) < 0) continue;
        const PadicValue v = PadicValue::from_rational(x, p, M);
        CHECK(v.residue_mod(M) == trunc_digits(x, p, M - 1));
    }
}
