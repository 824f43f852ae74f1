#include "padic_hyper/congruence.hpp"

namespace padic_hyper {

NuTable NuTable::build(const OrderedDatum& d) {
    NuTable nt;
    for (int j = 0; j < 4; ++j) {
        nt.at_t[j].resize(d.p);
        nt.at_u[j].resize(d.p);
        for (long a = 0; a < d.p; ++a) {
            nt.at_t[j][a] = nu(a, d.t[j]);
            nt.at_u[j][a] = nu(a, d.u[j]);
        }
    }
    return nt;
}

Rat lambda_factor(const OrderedDatum& d, long a, const Int& b) {
    Rat lam = 1;
    for (int j = 0; j < 4; ++j) {
        if (nu(a, d.t[j])) lam *= 1 + Rat(b) / d.r_dash[j];
        if (nu(a, d.u[j])) {
            const Rat f = 1 + Rat(b) / d.q_dash[j];
            if (f == 0)
                throw PoleAtB("Lambda pole: b = -q'_" + std::to_string(j + 1) + " exactly");
            lam /= f;
        }
    }
    return lam;
}

Rat lambda_with_prefactor(const OrderedDatum& d, long a, const Int& b) {
    return (1 + Rat(b) / d.q_dash[0]) * lambda_factor(d, a, b);
}

Rat lambda_table_entry(const OrderedDatum& d, long a, const Int& b) {
    const Rat bb(b);
    if (a <= d.u[0]) return 1 + bb / d.q_dash[0];
    if (a <= d.t[0]) return Rat(1);
    if (a <= d.t[1]) return 1 + bb / d.r_dash[0];
    if (a <= d.t[3])
        return (1 + bb / d.r_dash[0]) * (1 + bb / d.r_dash[1]) * (1 + bb / d.r_dash[2]);
    Rat top = (1 + bb / d.r_dash[0]) * (1 + bb / d.r_dash[1]) * (1 + bb / d.r_dash[2]) *
              (1 + bb / d.r_dash[3]);
    if (a <= d.u[1]) return top;
    const Rat f = 1 + bb / d.q_dash[1];
    if (f == 0) throw PoleAtB("Lambda table pole at b = -q2'");
    return top / f;
}

Rat lambda_modified(const OrderedDatum& d, long a, const Int& b) {
    Rat lam = lambda_factor(d, a, b);
    if (nu(a, d.u[1])) lam *= 1 + Rat(b) / d.q_dash[1];
    return lam;
}

GTrack g_track(const Rat& x, long count, const GammaContext& ctx, long r) {
    GTrack tr;
    tr.G1.reserve(count);
    tr.G2.reserve(count);
    auto G = g_extract(x, 2, r, ctx);
    tr.G1.push_back(G[0]);
    tr.G2.push_back(G[1]);
    const long p = ctx.prime();
    for (long a = 0; a + 1 < count; ++a) {
        const Rat arg = x + a;
        if (arg != 0 && vp(arg, p) == 0) {
            const Rat inv = 1 / arg;
            tr.G1.push_back(tr.G1.back() + PadicValue::from_rational(inv, p, ctx.precision()));
            tr.G2.push_back(tr.G2.back() + tr.G1[a].mul_rational(2 * inv));
        } else {
            tr.G1.push_back(tr.G1.back());
            tr.G2.push_back(tr.G2.back());
        }
    }
    return tr;
}

JValues j_values(const OrderedDatum& d, const GammaContext& ctx, long r) {
    const long p = d.p;
    JValues out;
    out.p = p;
    out.guaranteed = r;

    std::array<GTrack, 4> rtr, qtr;
    for (int j = 0; j < 4; ++j) {
        rtr[j] = g_track(d.r[j], p, ctx, r);
        // q3 = q4 = 1 for canonical data; reuse the track.
        if (j > 0 && d.q[j] == d.q[j - 1])
            qtr[j] = qtr[j - 1];
        else
            qtr[j] = g_track(d.q[j], p, ctx, r);
    }

    out.J1.reserve(p);
    out.J2.reserve(p);
    for (long a = 0; a < p; ++a) {
        PadicValue j1 = PadicValue::zero(p);
        for (int j = 0; j < 4; ++j) j1 = j1 + rtr[j].G1[a] - qtr[j].G1[a];

        PadicValue half_g2 = PadicValue::zero(p);
        for (int j = 0; j < 4; ++j) half_g2 = half_g2 + rtr[j].G2[a] - qtr[j].G2[a];
        half_g2 = half_g2.mul_rational(make_rat(1, 2));

        PadicValue sum_g1_q = PadicValue::zero(p);
        for (int j = 0; j < 4; ++j) sum_g1_q = sum_g1_q + qtr[j].G1[a];

        PadicValue cross = PadicValue::zero(p);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                cross = cross + rtr[i].G1[a] * rtr[j].G1[a] - qtr[i].G1[a] * qtr[j].G1[a];

        PadicValue j2 = half_g2 + sum_g1_q * (-j1) + cross;

        out.J1.push_back(j1.truncate_known(r));
        out.J2.push_back(j2.truncate_known(r));
    }
    return out;
}

CCoeffs c_coefficients(const OrderedDatum& d, const JValues& J) {
    const long p = d.p;
    const long digits = 6;
    PadicValue s1 = PadicValue::zero(p), s2 = PadicValue::zero(p), s3 = PadicValue::zero(p);
    Rat h = 1;  // H(a), exact
    for (long a = 0; a <= d.t[1]; ++a) {
        if (a <= d.u[0]) {
            const Rat inv_q1 = 1 / d.q_dash[0];
            s1 = s1 + (J.J1[a].mul_pow_p(1) + PadicValue::from_rational(inv_q1, p, digits))
                          .mul_rational(h);
            s2 = s2 + J.J1[a].mul_rational(h * inv_q1);
            s3 = s3 + J.J2[a].mul_rational(h * inv_q1);
        } else if (a <= d.t[0]) {
            s1 = s1 + J.J1[a].mul_rational(h).mul_pow_p(1);
            s2 = s2 + J.J2[a].mul_rational(h).mul_pow_p(1);
        } else {
            const Rat inv_r1 = 1 / d.r_dash[0];
            s1 = s1 + (J.J1[a].mul_pow_p(1) + PadicValue::from_rational(inv_r1, p, digits))
                          .mul_rational(h);
            s2 = s2 + J.J1[a].mul_rational(h * inv_r1);
            s3 = s3 + J.J2[a].mul_rational(h * inv_r1);
        }
        h *= hyper_ratio(d, a);
    }
    CCoeffs c;
    c.C1 = s1.mul_pow_p(1);
    c.C2 = s2.mul_pow_p(2);
    c.C3 = s3.mul_pow_p(3);
    return c;
}

InnerSumReport inner_sum(const OrderedDatum& d, const Int& b, const JValues& J) {
    const long p = d.p;
    const long digits = 6;
    InnerSumReport rep;
    rep.b = b;
    rep.modified_branch = vp(Rat(b) + d.q_dash[1], p) >= 1;

    const PadicValue bp = PadicValue::from_rational(Rat(b) * p, p, digits);
    const PadicValue one = PadicValue::one(p, digits);

    PadicValue acc = PadicValue::zero(p);
    PadicValue acc_mod = PadicValue::zero(p);
    Rat h = 1;
    for (long a = 0; a < p; ++a) {
        PadicValue series = one;
        if (b != 0) {
            series = series + J.J1[a] * bp + J.J2[a] * bp * bp;
        }
        const Rat ph = p * h;
        const Rat pre = 1 + Rat(b) / d.q_dash[0];
        acc = acc + (series.mul_rational(pre * lambda_factor(d, a, b)) - one).mul_rational(ph);
        acc_mod = acc_mod +
                  (series.mul_rational(pre * lambda_modified(d, a, b)) - one).mul_rational(ph);
        h *= hyper_ratio(d, a);
    }
    rep.inner = acc;
    rep.inner_modified = rep.modified_branch ? acc_mod : acc;

    const CCoeffs c = c_coefficients(d, J);
    rep.c_poly = c.C1.mul_rational(Rat(b)) + c.C2.mul_rational(Rat(b) * Rat(b));
    rep.equiv_mod_p3 = (rep.inner_modified - rep.c_poly).is_zero_mod(3);

    // p^s H(b) I(b) with the least s covering b.
    long s = 0;
    for (Int lim = 1; lim <= b; lim *= p) ++s;
    if (s == 0) s = 1;
    const PadicValue hb = hyper_coefficient(d, b, digits + s);
    rep.scaled_vanishes = (hb * rep.inner).mul_pow_p(s).is_zero_mod(3);
    return rep;
}

TheoremReport check_theorem(const OrderedDatum& d, long s, long digits) {
    if (digits <= 0) digits = working_digits(s + 1);
    TheoremReport rep;
    rep.s = s;
    const PadicValue lhs = truncated_sum(d, s + 1, digits).mul_pow_p(s + 1);
    const PadicValue f1 = truncated_sum(d, 1, digits).mul_pow_p(1);
    const PadicValue rhs = truncated_sum(d, s, digits).mul_pow_p(s) * f1;
    rep.lhs = lhs.residue_mod(3);
    rep.rhs = rhs.residue_mod(3);
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace padic_hyper
