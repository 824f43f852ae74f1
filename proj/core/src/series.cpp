#include "padic_hyper/series.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace padic_hyper {

long pochhammer_valuation(const Rat& a, const Int& k, long p) {
    if (k == 0) return 0;
    if (a == 0) return kInfValuation;
    if (a.get_den() == 1 && a <= 0 && -a < k) return kInfValuation;  // product hits zero
    if (!p_integral(a, p)) throw NonIntegralError("pochhammer_valuation: a not in Z_p");
    long total = 0;
    for (long i = 1;; ++i) {
        const Int pi = pow_int(p, i);
        const Int tr = trunc_digits(-a, p, i - 1);
        if (tr >= k) break;
        const Int term = (k + pi - tr - 1) / pi;
        total += term.get_si();
    }
    return total;
}

Rat hyper_ratio(const OrderedDatum& d, long k) {
    Rat num = 1, den = 1;
    for (int j = 0; j < 4; ++j) {
        num *= d.r[j] + k;
        den *= d.q[j] + k;
    }
    return num / den;
}

CoefficientStream::CoefficientStream(const OrderedDatum& d, long digits)
    : d_(d), digits_(digits), h_(PadicValue::one(d.p, digits)) {}

void CoefficientStream::advance() {
    h_ = h_.mul_rational(hyper_ratio(d_, k_));
    ++k_;
}

PadicValue hyper_coefficient(const OrderedDatum& d, const Int& k, long digits) {
    if (k < 0) throw Error("hyper_coefficient: negative index");
    CoefficientStream st(d, digits);
    for (Int i = 0; i < k; ++i) st.advance();
    return st.current();
}

Rat hyper_coefficient_exact(const OrderedDatum& d, long k) {
    Rat h = 1;
    for (long i = 0; i < k; ++i) h *= hyper_ratio(d, i);
    return h;
}

PadicValue truncated_sum(const OrderedDatum& d, long s, long digits) {
    if (s < 0) throw Error("truncated_sum: s must be >= 0");
    const Int terms = pow_int(d.p, s);
    CoefficientStream st(d, digits);
    PadicValue acc = PadicValue::zero(d.p);
    for (Int k = 0; k < terms; ++k) {
        acc = acc + st.current();
        st.advance();
    }
    return acc;
}

Rat truncated_sum_exact(const OrderedDatum& d, long s) {
    const Int terms = pow_int(d.p, s);
    if (terms > 100000) throw Error("truncated_sum_exact: truncation too large for the oracle");
    Rat acc = 0, h = 1;
    for (long k = 0; k < terms.get_si(); ++k) {
        acc += h;
        h *= hyper_ratio(d, k);
    }
    return acc;
}

long ValuationProfile::value_at(const Int& k) const {
    if (k < 0 || k >= domain_size()) throw Error("ValuationProfile::value_at: index out of range");
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), k);
    return values[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
}

std::string ValuationProfile::to_csv() const {
    std::ostringstream os;
    os << "k,vp\n";
    for (Int k = 0; k < domain_size(); ++k)
        os << k.get_str() << "," << value_at(k) << "\n";
    return os.str();
}

namespace {

// Piecewise-constant function on [0, p^level) described by jump starts.
struct Steps {
    std::vector<Int> starts;
    std::vector<long> vals;

    long at(const Int& k) const {
        auto it = std::upper_bound(starts.begin(), starts.end(), k);
        return vals[static_cast<std::size_t>(it - starts.begin()) - 1];
    }
};

// The six-range correction applied when passing from level i to level i+1;
// at level 0 these are the base-case values themselves.
Steps level_steps(const std::array<Int, 4>& t, const std::array<Int, 4>& u) {
    Steps s;
    s.starts = {Int(0), u[0] + 1, t[0] + 1, t[2] + 1, t[3] + 1, u[1] + 1};
    s.vals = {0, -1, 0, 2, 3, 2};
    // collapse empty ranges (t1 = t2 or t3 = t4 coincidences)
    Steps out;
    for (std::size_t i = 0; i < s.starts.size(); ++i) {
        while (i + 1 < s.starts.size() && s.starts[i + 1] == s.starts[i]) ++i;
        out.starts.push_back(s.starts[i]);
        out.vals.push_back(s.vals[i]);
    }
    return out;
}

ValuationProfile materialize(const OrderedDatum& d, long s,
                             const std::function<long(const Int&)>& value) {
    ValuationProfile vp;
    vp.p = d.p;
    vp.s = s;
    const Int n = pow_int(d.p, s);
    long prev = value(Int(0));
    vp.breakpoints.push_back(0);
    vp.values.push_back(prev);
    for (Int k = 1; k < n; ++k) {
        const long v = value(k);
        if (v != prev) {
            vp.breakpoints.push_back(k);
            vp.values.push_back(v);
            prev = v;
        }
    }
    return vp;
}

}  // namespace

ValuationProfile valuation_profile(const OrderedDatum& d, long s) {
    if (s < 1) throw Error("valuation_profile: s must be >= 1");
    std::array<Int, 4> t0, u0;
    for (int j = 0; j < 4; ++j) {
        t0[j] = d.t[j];
        u0[j] = d.u[j];
    }
    std::vector<Steps> levels{level_steps(t0, u0)};
    for (long i = 1; i < s; ++i) {
        auto [ti, ui] = ordered_jumps(d.hd, d.p, i);
        levels.push_back(level_steps(ti, ui));
    }
    auto value = [&](const Int& k) {
        long acc = 0;
        Int rem = k;
        for (long i = s - 1; i >= 0; --i) {
            acc += levels[static_cast<std::size_t>(i)].at(rem);
            rem %= pow_int(d.p, i);
        }
        return acc;
    };
    return materialize(d, s, value);
}

ValuationProfile valuation_profile_direct(const OrderedDatum& d, long s) {
    if (s < 1) throw Error("valuation_profile_direct: s must be >= 1");
    auto value = [&](const Int& k) {
        long v = 0;
        for (int j = 0; j < 4; ++j) {
            v += pochhammer_valuation(d.r[j], k, d.p);
            v -= pochhammer_valuation(d.q[j], k, d.p);
        }
        return v;
    };
    return materialize(d, s, value);
}

}  // namespace padic_hyper
