#include "padic_hyper/residues.hpp"

#include <algorithm>

namespace padic_hyper {

void RationalPoly::trim() {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
}

Rat RationalPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    RationalPoly d;
    if (c.size() <= 1) {
        d.c = {Rat(0)};
        return d;
    }
    d.c.resize(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * static_cast<long>(i);
    return d;
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    RationalPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    return r;
}

RationalPoly RationalPoly::mul_linear_root(const Rat& root) const {
    // times (x - root)
    RationalPoly r;
    r.c.assign(c.size() + 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        r.c[i + 1] += c[i];
        r.c[i] -= c[i] * root;
    }
    return r;
}

RationalPoly RationalPoly::deflate(const Rat& root) const {
    if (c.size() < 2) throw UnexpectedPole("deflating a constant");
    RationalPoly q;
    q.c.assign(c.size() - 1, Rat(0));
    Rat carry = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        q.c[i] = carry;
        carry = c[i] + carry * root;
    }
    if (carry != 0) throw UnexpectedPole("denominator root not at the catalogued pole");
    return q;
}

std::vector<Rat> RationalPoly::taylor_at(const Rat& x0, int count) const {
    std::vector<Rat> out;
    std::vector<Rat> work = c;
    for (int n = 0; n < count; ++n) {
        // synthetic division of `work` by (x - x0); remainder is the next coefficient
        Rat carry = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            const Rat tmp = work[i] + carry * x0;
            work[i] = carry;
            carry = tmp;
        }
        out.push_back(carry);
        if (!work.empty()) work.erase(work.begin());
        if (work.empty()) work = {Rat(0)};
    }
    return out;
}

RationalPoly RationalPoly::one() { return RationalPoly{{Rat(1)}}; }

RationalPoly RationalPoly::monic_linear(const Rat& root) {
    return RationalPoly{{-root, Rat(1)}};
}

namespace {

// (c0 - t)(c0 + 1 - t)...(c0 + len - 1 - t)
RationalPoly falling_window(const Rat& c0, long len) {
    RationalPoly r = RationalPoly::one();
    for (long m = 0; m < len; ++m) {
        // factor (c0 + m - t) = -(t - (c0 + m))
        r = r.mul_linear_root(c0 + m);
        for (auto& x : r.c) x = -x;
    }
    return r;
}

}  // namespace

std::pair<RationalPoly, RationalPoly> build_R(const OrderedDatum& d, int i) {
    if (i != 1 && i != 2) throw Error("build_R: i must be 1 or 2");
    const long p = d.p;
    RationalPoly num = RationalPoly::one();
    for (int j = 0; j < 4; ++j)
        num = num * falling_window(1 - p * d.r_dash[j], d.t[j]);
    num = num * falling_window(d.q[0], d.u[0] + 1);

    RationalPoly den = falling_window(1 - p * d.q_dash[0], d.u[0] + 1);
    RationalPoly poch = RationalPoly::one();  // (t)_p
    for (long m = 0; m < p; ++m) poch = poch.mul_linear_root(Rat(-m));
    for (int rep = 0; rep < i + 1; ++rep) den = den * poch;

    num.trim();
    den.trim();
    const long expect_num = 2 * p - 1 + d.u[0];
    const long expect_den = (i + 1) * p + 1 + d.u[0];
    if (num.degree() != expect_num || den.degree() != expect_den)
        throw StructureViolation("R_" + std::to_string(i) + " degrees off: got " +
                                 std::to_string(num.degree()) + "/" + std::to_string(den.degree()));
    return {num, den};
}

Rat PartialFractionDecomp::eval(const Rat& t) const {
    Rat acc = 0;
    const int o = order;
    for (long k = 0; k < p; ++k) {
        const Rat lin = t + k;
        Rat pw = lin * lin;
        if (o == 3) pw *= lin;
        acc += A[k] / pw;
        if (o == 3) acc += E[k] / (lin * lin);
        acc += B[k] / lin;
    }
    for (std::size_t k = 1; k <= D.size(); ++k)
        acc += D[k - 1] / (t - (Rat(static_cast<long>(k)) - p * q1_dash));
    return acc;
}

PartialFractionDecomp decompose(const RationalPoly& num, const RationalPoly& den,
                                const OrderedDatum& d, int i) {
    const long p = d.p;
    const int order = i + 1;
    PartialFractionDecomp pf;
    pf.order = order;
    pf.p = p;
    pf.q1_dash = d.q_dash[0];
    pf.A.resize(p);
    pf.B.resize(p);
    if (order == 3) pf.E.resize(p);
    pf.D.resize(d.u[0] + 1);

    RationalPoly rest = den;
    for (long k = 0; k < p; ++k) {
        const Rat t0(-k);
        RationalPoly deflated = rest;
        for (int rep = 0; rep < order; ++rep) deflated = deflated.deflate(t0);

        const auto n_taylor = num.taylor_at(t0, order);
        const auto q_taylor = deflated.taylor_at(t0, order);
        if (q_taylor[0] == 0) throw UnexpectedPole("higher-order pole than catalogued");
        std::vector<Rat> g(order);
        for (int l = 0; l < order; ++l) {
            Rat acc = n_taylor[l];
            for (int m = 0; m < l; ++m) acc -= g[m] * q_taylor[l - m];
            g[l] = acc / q_taylor[0];
        }
        pf.A[k] = g[0];
        if (order == 3) {
            pf.E[k] = g[1];
            pf.B[k] = g[2];
        } else {
            pf.B[k] = g[1];
        }
    }

    for (long k = 1; k <= d.u[0] + 1; ++k) {
        const Rat t0 = Rat(k) - p * d.q_dash[0];
        RationalPoly deflated = den.deflate(t0);
        pf.D[k - 1] = num.eval(t0) / deflated.eval(t0);
    }
    return pf;
}

bool reassembly_check(const PartialFractionDecomp& pf, const RationalPoly& num,
                      const RationalPoly& den, const OrderedDatum& d) {
    // The difference R - reassembly, over the common denominator den, has
    // numerator degree <= deg(den); agreeing on deg(den)+2 points off the
    // pole set forces it to vanish identically.
    const long samples = den.degree() + 2;
    for (long s = 0; s < samples; ++s) {
        const Rat t(d.p + s);
        if (num.eval(t) / den.eval(t) != pf.eval(t)) return false;
    }
    return true;
}

DkReport dk_valuation_check(const PartialFractionDecomp& pf, int i, long p) {
    DkReport rep;
    rep.i = i;
    rep.min_valuation = kInfValuation;
    for (const auto& dk : pf.D)
        if (dk != 0) rep.min_valuation = std::min(rep.min_valuation, vp(dk, p));
    rep.bound_holds = rep.min_valuation >= 3 - i;
    if (rep.bound_holds) {
        const Rat scale = Rat(1) / Rat(pow_int(p, 3 - i));
        for (const auto& dk : pf.D) rep.delta.push_back(dk * scale);
    }
    return rep;
}

AkReport ak_leading_check(const PartialFractionDecomp& pf, const OrderedDatum& d, int i,
                          const JValues& J) {
    const long p = d.p;
    AkReport rep;
    rep.i = i;
    rep.valuations_match = true;
    rep.unit_pm_one = true;
    Rat h = 1;  // H(k)
    int sign = 0;
    long strong = 0;
    for (long k = 0; k < p; ++k) {
        const Rat ratio = pf.A[k] / (p * h);
        if (vp(ratio, p) != 0) rep.valuations_match = false;
        const Int r0 = trunc_digits(ratio, p, 0);
        int s = 0;
        if (r0 == 1) s = 1;
        else if (r0 == p - 1) s = -1;
        if (s == 0) rep.unit_pm_one = false;
        if (k == 0) sign = s;
        else if (s != sign) rep.unit_pm_one = false;

        if (i == 1) {
            // B_k ≡ -A_k (J_1(k) + sum_j nu(k,t_j)/(p r_j') + nu(u_1+1,k)/(p q_1')
            //               - nu(k,u_2)/(p q_2'))  mod p^{2+v_p(A_k)}
            Rat nu_sum = 0;
            for (int j = 0; j < 4; ++j)
                if (nu(k, d.t[j])) nu_sum += 1 / (p * d.r_dash[j]);
            if (nu(d.u[0] + 1, k)) nu_sum += 1 / (p * d.q_dash[0]);
            if (nu(k, d.u[1])) nu_sum -= 1 / (p * d.q_dash[1]);

            const long va = vp(pf.A[k], p);
            const PadicValue lhs = PadicValue::from_rational(pf.B[k] + pf.A[k] * nu_sum, p, 8) +
                                   J.J1[k].mul_rational(pf.A[k]);
            if (lhs.is_zero_mod(2 + va)) ++strong;
        }
        h *= hyper_ratio(d, k);
    }
    rep.sign = sign;
    rep.b_congruence_checked = strong;
    rep.b_congruence = (i != 1) || strong == p;
    return rep;
}

ResidueCReport residue_to_C_check(const OrderedDatum& d, int i, const JValues& J) {
    ResidueCReport rep;
    rep.i = i;
    auto [num, den] = build_R(d, i);
    const auto pf = decompose(num, den, d, i);

    Rat bsum = 0, dsum = 0;
    for (const auto& b : pf.B) bsum += b;
    for (const auto& dk : pf.D) dsum += dk;
    rep.residue_sum_zero = (bsum + dsum == 0);

    const auto ak = ak_leading_check(pf, d, i, J);
    const int mult = (i == 1) ? -ak.sign : ak.sign;
    const Rat scaled = Rat(mult) * Rat(pow_int(d.p, i)) * bsum;
    rep.scaled_sum = PadicValue::from_rational(scaled, d.p, 6).residue_mod(3);
    const auto c = c_coefficients(d, J);
    rep.c_value = (i == 1 ? c.C1 : c.C2).residue_mod(3);
    rep.matches_c = rep.scaled_sum == rep.c_value;
    return rep;
}

}  // namespace padic_hyper
