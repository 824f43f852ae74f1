#include "padic_hyper/datum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace padic_hyper {

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::string HyperDatum::id() const {
    return rat_str(r1) + "," + rat_str(r2) + "," + rat_str(q);
}

HyperDatum HyperDatum::make(const Rat& r1, const Rat& r2, const Rat& q) {
    HyperDatum hd;
    hd.r1 = r1;
    hd.r2 = r2;
    hd.q = q;
    hd.alpha = {r1, 1 - r1, r2, 1 - r2};
    hd.beta = {Rat(1), Rat(1), q, 2 - q};
    for (const auto& c : canonical_six())
        if (c.r1 == r1 && c.r2 == r2 && c.q == q) hd.canonical = true;
    return hd;
}

HyperDatum HyperDatum::parse(const std::string& text) {
    std::array<std::string, 3> part;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        const auto comma = text.find(',', start);
        if ((comma == std::string::npos) != (i == 2))
            throw FormatError("datum must be 'r1,r2,q': '" + text + "'");
        part[i] = text.substr(start, comma == std::string::npos ? comma : comma - start);
        start = comma + 1;
    }
    return make(parse_rat(part[0]), parse_rat(part[1]), parse_rat(part[2]));
}

const std::vector<HyperDatum>& HyperDatum::canonical_six() {
    static const std::vector<HyperDatum> six = [] {
        std::vector<HyperDatum> v;
        const long table[6][6] = {
            {1, 2, 1, 2, 4, 3}, {1, 2, 1, 2, 7, 6}, {1, 2, 1, 3, 7, 6},
            {1, 2, 1, 3, 5, 4}, {1, 2, 1, 4, 7, 6}, {1, 2, 1, 2, 5, 4},
        };
        for (const auto& row : table) {
            HyperDatum hd;
            hd.r1 = make_rat(row[0], row[1]);
            hd.r2 = make_rat(row[2], row[3]);
            hd.q = make_rat(row[4], row[5]);
            hd.alpha = {hd.r1, 1 - hd.r1, hd.r2, 1 - hd.r2};
            hd.beta = {Rat(1), Rat(1), hd.q, 2 - hd.q};
            hd.canonical = true;
            v.push_back(hd);
        }
        return v;
    }();
    return six;
}

Int HyperDatum::denominator_lcm() const {
    Int l = 1;
    for (const auto& x : alpha) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    for (const auto& x : beta) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    return l;
}

bool HyperDatum::valid_prime(long p) const {
    return is_prime(p) && p >= 7 && denominator_lcm() % p != 0;
}

OrderedDatum order_datum(const HyperDatum& hd, long p) {
    if (!is_prime(p) || p < 7)
        throw InvalidPrime("prime must be >= 7: " + std::to_string(p));
    if (hd.denominator_lcm() % p == 0)
        throw InvalidPrime("p = " + std::to_string(p) + " divides a parameter denominator of " + hd.id());

    OrderedDatum od;
    od.hd = hd;
    od.p = p;

    auto fail = [&](const std::string& what) {
        if (hd.canonical) throw StructureViolation(hd.id() + " @ p=" + std::to_string(p) + ": " + what);
        od.warnings.push_back(what);
    };

    // Sort both parameter lists by dash value; ties keep original index.
    std::array<int, 4> ai{0, 1, 2, 3}, bi{0, 1, 2, 3};
    std::array<Rat, 4> adash, bdash;
    for (int i = 0; i < 4; ++i) adash[i] = dwork_dash(hd.alpha[i], p);
    for (int i = 0; i < 4; ++i) bdash[i] = dwork_dash(hd.beta[i], p);
    std::stable_sort(ai.begin(), ai.end(), [&](int x, int y) { return adash[x] < adash[y]; });
    std::stable_sort(bi.begin(), bi.end(), [&](int x, int y) { return bdash[x] < bdash[y]; });
    for (int i = 0; i < 4; ++i) {
        od.r[i] = hd.alpha[ai[i]];
        od.r_dash[i] = adash[ai[i]];
        od.q[i] = hd.beta[bi[i]];
        od.q_dash[i] = bdash[bi[i]];
        od.t[i] = trunc_digits(-od.r[i], p, 0).get_si();
        od.u[i] = trunc_digits(-od.q[i], p, 0).get_si();
    }

    if (od.r_dash[0] + od.r_dash[3] != 1 || od.r_dash[1] + od.r_dash[2] != 1)
        fail("dash sums r1'+r4' = r2'+r3' = 1 violated");
    if (od.q_dash[0] + od.q_dash[1] != 1)
        fail("dash sum q1'+q2' = 1 violated");
    if (od.t[0] + od.t[3] != p - 1 || od.t[1] + od.t[2] != p - 1)
        fail("t1+t4 = t2+t3 = p-1 violated");
    if (od.u[0] + od.u[1] != p - 2 || od.u[2] != p - 1 || od.u[3] != p - 1)
        fail("u1+u2 = p-2, u3 = u4 = p-1 violated");
    // The t4/u2 comparison degenerates to equality at boundary primes
    // (p = (q2 - r4)/(q2' - r4') when that ratio is a prime >= 7), which only
    // empties one piece of the valuation profile; everything downstream works
    // from the nu-products, so non-strict is the right check there.
    if (!(od.u[0] < od.t[0] && od.t[0] <= od.t[1] && od.t[1] == od.t[2] && od.t[2] <= od.t[3] &&
          od.t[3] <= od.u[1] && od.u[1] < od.u[2]))
        fail("interlacing chain u1 < t1 <= t2 = t3 <= t4 <= u2 < u3 violated");
    {
        std::array<Rat, 4> sa = hd.alpha, sd = od.r_dash;
        std::sort(sa.begin(), sa.end());
        std::sort(sd.begin(), sd.end());
        if (sa != sd) fail("alpha not closed under the dash operation");
    }
    for (int i = 0; i < 4; ++i)
        if (!(od.q_dash[0] < od.r_dash[i] && od.r_dash[i] < od.q_dash[1]))
            fail("q1' < ri' < q2' violated");
    if (hd.canonical) {
        if (od.r[1] != make_rat(1, 2) || od.r[2] != make_rat(1, 2))
            fail("relabelling should put r2 = r3 = 1/2");
        if (od.q[2] != 1 || od.q[3] != 1)
            fail("relabelling should put q3 = q4 = 1");
        // beta as a multiset must equal {1, 1, q1'+1, q2'}
        std::array<Rat, 4> expect{Rat(1), Rat(1), od.q_dash[0] + 1, od.q_dash[1]};
        std::array<Rat, 4> got = od.q;
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        if (expect != got) fail("beta != {1, 1, q1'+1, q2'}");
    }
    return od;
}

std::pair<std::vector<Int>, std::vector<Int>> alpha_beta_truncations(const HyperDatum& hd,
                                                                     long p, long i) {
    std::vector<Int> a, b;
    for (const auto& x : hd.alpha) a.push_back(trunc_digits(-x, p, i));
    for (const auto& x : hd.beta) b.push_back(trunc_digits(-x, p, i));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return {a, b};
}

std::pair<std::array<Int, 4>, std::array<Int, 4>> ordered_jumps(const HyperDatum& hd,
                                                                long p, long i) {
    if (i < 1) throw Error("ordered_jumps requires i >= 1");
    auto [a, b] = alpha_beta_truncations(hd, p, i);
    std::array<Int, 4> t, u;
    std::copy(a.begin(), a.end(), t.begin());
    std::copy(b.begin(), b.end(), u.begin());
    const Int pi = pow_int(p, i), pi1 = pow_int(p, i + 1);
    const bool ok = pi <= u[0] && u[0] < t[0] && t[0] <= t[1] && t[1] == t[2] && t[2] <= t[3] &&
                    t[3] <= u[1] && u[1] < u[2] && u[2] == u[3] && u[3] == pi1 - 1;
    if (!ok) {
        if (hd.canonical)
            throw StructureViolation(hd.id() + " @ p=" + std::to_string(p) +
                                     ", i=" + std::to_string(i) + ": level-i interlacing violated");
    }
    return {t, u};
}

}  // namespace padic_hyper
