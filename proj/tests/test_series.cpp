#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <padic_hyper/series.hpp>

#include "oracles.hpp"

using namespace padic_hyper;

TEST_CASE("pochhammer valuation formula") {
    CHECK(pochhammer_valuation(Rat(1), 49, 7) == 8);  // Legendre
    CHECK(pochhammer_valuation(make_rat(1, 2), 5, 7) == 1);
    CHECK(pochhammer_valuation(Rat(7), 3, 7) == 1);

    std::mt19937 rng(5);
    int done = 0;
    while (done < 500) {
        const long p = std::array<long, 3>{7, 11, 13}[rng() % 3];
        long den = 1 + rng() % 40;
        if (den % p == 0) continue;
        const Rat a = make_rat(static_cast<long>(rng() % 600) - 300, den);
        const long k = rng() % 400;
        if (a == 0) continue;
        if (a.get_den() == 1 && a <= 0 && -a < k) continue;
        CHECK(pochhammer_valuation(a, k, p) == oracles::pochhammer_valuation_brute(a, k, p));
        ++done;
    }
}

TEST_CASE("coefficient stream against exact rationals") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : {7L, 11L, 13L}) {
            if (!hd.valid_prime(p)) continue;
            const auto d = order_datum(hd, p);
            CoefficientStream st(d, 8);
            for (long k = 0; k < p; ++k) {
                const Rat exact = oracles::hyper_exact(d, k);
                const PadicValue& h = st.current();
                if (exact == 0) {
                    CHECK(h.exact_zero());
                } else {
                    CHECK(h.valuation() == vp(exact, p));
                    CHECK(h.congruent_mod(PadicValue::from_rational(exact, p, 8), 4));
                }
                st.advance();
            }
        }
    }
}

TEST_CASE("H(0) = 1 and the valuation of H matches the rising-factorial formula") {
    const auto d = order_datum(HyperDatum::parse("1/2,1/2,4/3"), 7);
    CHECK(hyper_coefficient(d, 0, 6).residue_mod(3) == 1);
    const Rat h2 = oracles::hyper_exact(d, 2);
    CHECK(hyper_coefficient(d, 2, 6).congruent_mod(PadicValue::from_rational(h2, 7, 6), 5));
    for (long k = 0; k < 14; ++k) {
        long v = 0;
        for (int j = 0; j < 4; ++j) {
            v += pochhammer_valuation(d.r[j], k, 7);
            v -= pochhammer_valuation(d.q[j], k, 7);
        }
        const Rat exact = oracles::hyper_exact(d, k);
        CHECK(v == vp(exact, 7));
    }
}

TEST_CASE("truncated sums: convention, integrality, oracle equivalence") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : {7L, 11L, 13L}) {
            if (!hd.valid_prime(p)) continue;
            const auto d = order_datum(hd, p);
            // F_0 = 1
            CHECK(truncated_sum(d, 0, 6).residue_mod(3) == 1);
            for (long s : {1L, 2L}) {
                const PadicValue fs = truncated_sum(d, s, working_digits(s));
                const Rat exact = truncated_sum_exact(d, s);
                // p^s F_s in Z_p
                CHECK(vp(exact, p) >= -s);
                const PadicValue scaled = fs.mul_pow_p(s);
                CHECK(scaled.valuation() >= 0);
                // PadicValue pipeline == exact rational pipeline
                CHECK(scaled.congruent_mod(
                    PadicValue::from_rational(exact * pow_int(p, s), p, working_digits(s)), 4));
            }
        }
    }
}

TEST_CASE("p^s F_s integrality for larger primes") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : {17L, 41L, 97L}) {
            if (!hd.valid_prime(p)) continue;
            const auto d = order_datum(hd, p);
            for (long s : {1L, 2L})
                CHECK(truncated_sum(d, s, working_digits(s)).mul_pow_p(s).valuation() >= 0);
        }
    }
}

TEST_CASE("valuation profile: base case table and the induction") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : {7L, 11L, 13L, 29L}) {
            if (!hd.valid_prime(p)) continue;
            const auto d = order_datum(hd, p);
            const auto prof = valuation_profile(d, 1);
            // six-case base table
            for (long k = 0; k <= p - 1; ++k) {
                long expect;
                if (k <= d.u[0]) expect = 0;
                else if (k <= d.t[0]) expect = -1;
                else if (k <= d.t[1]) expect = 0;
                else if (k <= d.t[3]) expect = 2;
                else if (k <= d.u[1]) expect = 3;
                else expect = 2;
                CHECK(prof.value_at(k) == expect);
                // v_p(pH(k)) = 3 or 4 past t3
                if (k > d.t[2]) CHECK(1 + prof.value_at(k) >= 3);
            }
            // direct construction agrees
            const auto direct = valuation_profile_direct(d, 1);
            CHECK(prof.breakpoints == direct.breakpoints);
            CHECK(prof.values == direct.values);
        }
    }
}

TEST_CASE("profile induction equals brute force at depth 2") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        const long p = 11;
        if (!hd.valid_prime(p)) continue;
        const auto d = order_datum(hd, p);
        const auto prof = valuation_profile(d, 2);
        const auto direct = valuation_profile_direct(d, 2);
        for (Int k = 0; k < pow_int(p, 2); ++k) {
            CHECK(prof.value_at(k) == direct.value_at(k));
            // spot-check against fully exact rationals on a stride
            if (k % 7 == 0) CHECK(prof.value_at(k) == vp(oracles::hyper_exact(d, k.get_si()), p));
        }
    }
}

TEST_CASE("figure-shaped breakpoints for 1/2,1/4,7/6") {
    const auto hd = HyperDatum::parse("1/2,1/4,7/6");
    for (long p : {23L, 31L}) {
        const auto d = order_datum(hd, p);
        const auto prof = valuation_profile(d, 1);
        // steps at [p/6], floor(p/4)+1, floor(p/2)+1, floor(3p/4)+1, [5p/6]
        // with levels 0,-1,0,2,3,2
        CHECK(prof.values == std::vector<long>{0, -1, 0, 2, 3, 2});
        CHECK(prof.breakpoints[1] == d.u[0] + 1);
        CHECK(prof.breakpoints[2] == p / 4 + 1);
        CHECK(prof.breakpoints[3] == p / 2 + 1);
        CHECK(prof.breakpoints[4] == 3 * p / 4 + 1);
        CHECK(prof.breakpoints[5] == d.u[1] + 1);
    }
}

TEST_CASE("csv export shape") {
    const auto d = order_datum(HyperDatum::parse("1/2,1/2,4/3"), 7);
    const auto prof = valuation_profile(d, 2);
    const auto csv = prof.to_csv();
    CHECK(csv.rfind("k,vp\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 49 + 1);
}
