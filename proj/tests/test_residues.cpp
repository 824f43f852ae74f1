#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <padic_hyper/residues.hpp>

#include "oracles.hpp"

using namespace padic_hyper;

TEST_CASE("polynomial helpers") {
    RationalPoly x2{{Rat(-6), Rat(1), Rat(1)}};  // (x-2)(x+3)
    CHECK(x2.eval(Rat(2)) == 0);
    CHECK(x2.deflate(Rat(2)).eval(Rat(1)) == 4);
    CHECK_THROWS_AS(x2.deflate(Rat(5)), UnexpectedPole);
    const auto taylor = x2.taylor_at(Rat(1), 3);
    CHECK(taylor[0] == -4);
    CHECK(taylor[1] == 3);
    CHECK(taylor[2] == 1);
}

TEST_CASE("R_i degrees") {
    const auto d = order_datum(HyperDatum::parse("1/2,1/2,4/3"), 7);
    auto [n1, d1] = build_R(d, 1);
    CHECK(n1.degree() == 14);
    CHECK(d1.degree() == 16);
    auto [n2, d2] = build_R(d, 2);
    CHECK(n2.degree() == 14);
    CHECK(d2.degree() == 23);
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : {7L, 11L}) {
            if (!hd.valid_prime(p)) continue;
            const auto dd = order_datum(hd, p);
            for (int i : {1, 2}) {
                auto [num, den] = build_R(dd, i);
                CHECK(den.degree() - num.degree() >= 2);
            }
        }
    }
}

TEST_CASE("decomposition: reassembly, residue sums, A_k formula") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : {7L, 11L}) {
            if (!hd.valid_prime(p)) continue;
            const auto d = order_datum(hd, p);
            for (int i : {1, 2}) {
                auto [num, den] = build_R(d, i);
                const auto pf = decompose(num, den, d, i);
                CHECK(reassembly_check(pf, num, den, d));

                Rat bsum = 0, dsum = 0;
                for (const auto& b : pf.B) bsum += b;
                for (const auto& dk : pf.D) dsum += dk;
                CHECK(bsum + dsum == 0);

                // A_k by the direct limit formula (t+k)^{i+1} R(t) |_{t=-k}
                for (long k : {0L, 1L, p - 1}) {
                    RationalPoly deflated = den;
                    for (int rep = 0; rep < i + 1; ++rep) deflated = deflated.deflate(Rat(-k));
                    CHECK(pf.A[k] == num.eval(Rat(-k)) / deflated.eval(Rat(-k)));
                }
            }
        }
    }
}

TEST_CASE("D_k valuations") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : {7L, 11L, 13L}) {
            if (!hd.valid_prime(p)) continue;
            const auto d = order_datum(hd, p);
            for (int i : {1, 2}) {
                auto [num, den] = build_R(d, i);
                const auto pf = decompose(num, den, d, i);
                const auto rep = dk_valuation_check(pf, i, p);
                CHECK(rep.bound_holds);
                CHECK(rep.min_valuation >= 3 - i);
                for (const auto& delta : rep.delta) CHECK(vp(delta, p) >= 0);
            }
        }
    }
    // exceptional factor at HD(1/2,1/4,7/6), p = 7 still satisfies the bound
    const auto d = order_datum(HyperDatum::parse("1/2,1/4,7/6"), 7);
    auto [num, den] = build_R(d, 1);
    const auto rep = dk_valuation_check(decompose(num, den, d, 1), 1, 7);
    CHECK(rep.bound_holds);
}

TEST_CASE("A_k leading behaviour and the B_k congruence") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : {7L, 11L, 13L}) {
            if (!hd.valid_prime(p)) continue;
            const auto d = order_datum(hd, p);
            GammaContext ctx(p, 12);
            const auto J = j_values(d, ctx);
            for (int i : {1, 2}) {
                auto [num, den] = build_R(d, i);
                const auto pf = decompose(num, den, d, i);
                const auto rep = ak_leading_check(pf, d, i, J);
                CHECK(rep.valuations_match);
                CHECK(rep.unit_pm_one);
                CHECK(rep.sign != 0);
                if (i == 1) CHECK(rep.b_congruence_checked == p);
            }
        }
    }
}

TEST_CASE("scaled residue sums reproduce the C coefficients") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : {7L, 11L, 13L}) {
            if (!hd.valid_prime(p)) continue;
            const auto d = order_datum(hd, p);
            GammaContext ctx(p, 12);
            const auto J = j_values(d, ctx);
            for (int i : {1, 2}) {
                const auto rep = residue_to_C_check(d, i, J);
                CHECK(rep.residue_sum_zero);
                CHECK(rep.matches_c);
                CHECK(rep.scaled_sum == 0);  // C_i ≡ 0 mod p^3
            }
        }
    }
}

TEST_CASE("logarithmic derivatives of (t)_a against finite-difference G values") {
    // d/dt log (t)_a = G1(t+a) - G1(t) + nu(a, [-t]_0)/(t + [-t]_0), and the
    // second derivative identity built from G2.
    std::mt19937 rng(43);
    const long p = 11;
    GammaContext ctx(p, 12);
    const long r = 2;
    int done = 0;
    while (done < 50) {
        long den = 2 + rng() % 20;
        if (den % p == 0) continue;
        const Rat t = make_rat(static_cast<long>(rng() % 120) - 60, den);
        const long a = rng() % p;
        if (!p_integral(t, p)) continue;

        // exact rational derivatives of (x)_a at x = t
        Rat poch = 1, d1 = 0, d2 = 0;
        for (long m = 0; m < a; ++m) poch *= t + m;
        if (poch == 0) continue;
        for (long m = 0; m < a; ++m) d1 += 1 / (t + m);
        for (long m = 0; m < a; ++m)
            for (long n = 0; n < a; ++n)
                if (m != n) d2 += (1 / (t + m)) * (1 / (t + n));
        // d1 = (d/dt (t)_a)/(t)_a, d2 = (d2/dt2 (t)_a)/(t)_a

        const long t0 = trunc_digits(-t, p, 0).get_si();
        const Rat corr = Rat(nu(a, t0)) / (t + t0);

        const auto g1_ta = g1_approx(t + a, r, ctx).value;
        const auto g1_t = g1_approx(t, r, ctx).value;
        const PadicValue lhs1 = PadicValue::from_rational(d1, p, 8);
        const PadicValue rhs1 = g1_ta - g1_t + PadicValue::from_rational(corr, p, 8);
        long m1 = std::min({static_cast<long>(r), lhs1.known_exponent(), rhs1.known_exponent()});
        CHECK((lhs1 - rhs1).is_zero_mod(m1));

        const auto g2_ta = g2_approx(t + a, r, ctx).value;
        const auto g2_t = g2_approx(t, r, ctx).value;
        const PadicValue sq = rhs1 * rhs1;
        const PadicValue rhs2 = sq + g2_ta - g2_t - g1_ta * g1_ta + g1_t * g1_t -
                                PadicValue::from_rational(corr / (t + t0), p, 8);
        const PadicValue lhs2 = PadicValue::from_rational(d2, p, 8);
        long m2 = std::min({static_cast<long>(r), lhs2.known_exponent(), rhs2.known_exponent()});
        CHECK((lhs2 - rhs2).is_zero_mod(m2));
        ++done;
    }
}
