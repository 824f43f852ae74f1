#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <padic_hyper/datum.hpp>

#include "oracles.hpp"

using namespace padic_hyper;

namespace {

std::vector<long> primes_in(long lo, long hi, const HyperDatum& hd) {
    std::vector<long> out;
    for (long p = lo; p <= hi; ++p)
        if (hd.valid_prime(p)) out.push_back(p);
    return out;
}

// Nearest integer to a/b (exact arithmetic; never half-integral for the
// arguments used here).
Int nearest(const Int& a, long b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), Int(b).get_mpz_t());
    return 2 * r > b ? q + 1 : q;
}

}  // namespace

TEST_CASE("parsing and canonical list") {
    const auto hd = HyperDatum::parse("1/2,1/2,4/3");
    CHECK(hd.canonical);
    CHECK(hd.id() == "1/2,1/2,4/3");
    CHECK(HyperDatum::canonical_six().size() == 6);
    CHECK_FALSE(HyperDatum::parse("1/2,1/5,4/3").canonical);
    CHECK_THROWS_AS(HyperDatum::parse("1/2,1/2"), FormatError);
    CHECK_THROWS_AS(HyperDatum::parse("1/0,1/2,4/3"), FormatError);
}

TEST_CASE("order_datum on the worked example") {
    const auto od = order_datum(HyperDatum::parse("1/2,1/2,4/3"), 7);
    CHECK(od.t == std::array<long, 4>{3, 3, 3, 3});
    CHECK(od.u == std::array<long, 4>{1, 4, 6, 6});
    CHECK(od.q[0] == make_rat(4, 3));
    CHECK(od.q_dash[0] == make_rat(1, 3));
    CHECK(od.warnings.empty());
}

TEST_CASE("t2 = t3 = (p-1)/2 whenever 1/2 is a parameter") {
    const auto hd = HyperDatum::parse("1/2,1/2,7/6");
    for (long p : primes_in(7, 60, hd)) {
        const auto od = order_datum(hd, p);
        CHECK(od.t[1] == (p - 1) / 2);
        CHECK(od.t[2] == (p - 1) / 2);
    }
}

TEST_CASE("beta dash set is {1, 1, q-1, 2-q}") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : primes_in(7, 40, hd)) {
            std::multiset<Rat> dashes, expect{Rat(1), Rat(1), hd.q - 1, 2 - hd.q};
            for (const auto& b : hd.beta) dashes.insert(dwork_dash(b, p));
            CHECK(dashes == expect);
        }
    }
}

TEST_CASE("identities across all data and primes up to 200") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : primes_in(7, 200, hd)) {
            const auto od = order_datum(hd, p);  // throws on any violation
            CHECK(od.r_dash[0] + od.r_dash[3] == 1);
            CHECK(od.r_dash[1] + od.r_dash[2] == 1);
            CHECK(od.q_dash[0] + od.q_dash[1] == 1);
            CHECK(od.r[1] == make_rat(1, 2));
            CHECK(od.r[2] == make_rat(1, 2));
            for (int i = 0; i < 4; ++i) {
                CHECK(od.q_dash[0] < od.r_dash[i]);
                CHECK(od.r_dash[i] < od.q_dash[1]);
                // t_j = p r_j' - r_j, u_j = p q_j' - q_j
                CHECK(Rat(od.t[i]) == p * od.r_dash[i] - od.r[i]);
                CHECK(Rat(od.u[i]) == p * od.q_dash[i] - od.q[i]);
            }
        }
    }
}

TEST_CASE("prime validation") {
    const auto hd = HyperDatum::parse("1/2,1/2,4/3");
    CHECK_THROWS_AS(order_datum(hd, 5), InvalidPrime);
    CHECK_THROWS_AS(order_datum(hd, 9), InvalidPrime);
    CHECK_THROWS_AS(order_datum(HyperDatum::parse("1/2,1/3,5/4"), 3), InvalidPrime);
    // a prime dividing a denominator only for some data
    CHECK_THROWS_AS(order_datum(HyperDatum::parse("1/2,1/7,4/3"), 7), InvalidPrime);
}

TEST_CASE("non-canonical data produce warnings instead of throws") {
    const auto hd = HyperDatum::parse("1/2,1/5,4/3");
    const auto od = order_datum(hd, 7);
    CHECK(!od.warnings.empty());
}

TEST_CASE("truncation multisets match Figure-style closed forms") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : {7L, 11L, 13L}) {
            if (!hd.valid_prime(p)) continue;
            for (long i : {0L, 1L, 2L}) {
                auto [a, b] = alpha_beta_truncations(hd, p, i);
                // cross-check against the digit-scan oracle
                std::vector<Int> scan_a, scan_b;
                for (const auto& x : hd.alpha)
                    scan_a.push_back(oracles::neg_trunc_scan(x.get_num(), x.get_den(), p, i));
                for (const auto& x : hd.beta)
                    scan_b.push_back(oracles::neg_trunc_scan(x.get_num(), x.get_den(), p, i));
                std::sort(scan_a.begin(), scan_a.end());
                std::sort(scan_b.begin(), scan_b.end());
                CHECK(a == scan_a);
                CHECK(b == scan_b);

                // closed forms, as multisets
                const Int P = pow_int(p, i + 1);
                std::vector<Int> ca, cb{P - 1, P - 1};
                if (hd.r2 == make_rat(1, 2)) {
                    ca = {(P - 1) / 2, (P - 1) / 2, (P - 1) / 2, (P - 1) / 2};
                } else {
                    const long m = hd.r2.get_den().get_si();  // 3 or 4
                    ca = {(P / m), (P - 1) / 2, (P - 1) / 2, ((m - 1) * P / m)};
                }
                const long qd = hd.q.get_den().get_si();  // 3, 4 or 6
                cb.push_back(nearest(P, qd) - 1);
                cb.push_back(nearest((qd - 1) * P, qd) - 1);
                std::sort(ca.begin(), ca.end());
                std::sort(cb.begin(), cb.end());
                CHECK(a == ca);
                CHECK(b == cb);
            }
        }
    }
}

TEST_CASE("ordered jumps interlace at every level") {
    for (const auto& hd : HyperDatum::canonical_six()) {
        for (long p : {7L, 11L, 13L, 23L}) {
            if (!hd.valid_prime(p)) continue;
            for (long i : {1L, 2L}) {
                auto [t, u] = ordered_jumps(hd, p, i);  // throws if the chain fails
                CHECK(u[2] == pow_int(p, i + 1) - 1);
                CHECK(u[3] == pow_int(p, i + 1) - 1);
                CHECK(u[0] >= pow_int(p, i));
            }
        }
    }
    // i = 0 reduces to the order_datum chain
    const auto hd = HyperDatum::parse("1/2,1/4,7/6");
    const auto od = order_datum(hd, 11);
    auto [a, b] = alpha_beta_truncations(hd, 11, 0);
    std::vector<Int> t(a), u(b);
    for (int j = 0; j < 4; ++j) {
        CHECK(t[j] == od.t[j]);
        CHECK(u[j] == od.u[j]);
    }
}
