// padic-hyper: batch verification of the Dwork-type congruences, profile
// export, and datum inspection.
//
// Exit codes: 0 all checks hold, 1 at least one fails, 2 usage error,
// 3 data error.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include <padic_hyper/congruence.hpp>
#include <padic_hyper/modular.hpp>
#include <padic_hyper/report.hpp>
#include <padic_hyper/residues.hpp>
#include <padic_hyper/series.hpp>

using namespace padic_hyper;

namespace {

struct Options {
    std::string suite;
    std::string hd;
    bool all = false;
    std::string primes = "7..97";
    std::string s_list = "1";
    std::string coeffs;
    std::string out;
    std::string format = "json";
    int jobs = 1;
};

std::pair<long, long> parse_prime_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long p = std::stol(text);
        return {p, p};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
}

std::vector<long> parse_s_list(const std::string& text) {
    std::vector<long> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!tok.empty()) out.push_back(std::stol(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw FormatError("empty --s list");
    return out;
}

std::vector<HyperDatum> select_data(const Options& opt) {
    if (opt.all || opt.hd.empty()) return HyperDatum::canonical_six();
    const auto hd = HyperDatum::parse(opt.hd);
    if (!hd.canonical)
        std::cerr << "note: " << hd.id()
                  << " is outside the six canonical tuples; structure checks become warnings\n";
    return {hd};
}

std::vector<long> select_primes(const Options& opt, const HyperDatum& hd) {
    const auto [lo, hi] = parse_prime_range(opt.primes);
    std::vector<long> out;
    for (long p = std::max<long>(lo, 2); p <= hi; ++p)
        if (hd.valid_prime(p)) out.push_back(p);
    return out;
}

std::string coeffs_dir(const Options& opt) {
    if (!opt.coeffs.empty()) return opt.coeffs;
    if (const char* env = std::getenv("PADIC_HYPER_DATA_DIR")) return env;
    return "data";
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

CongruenceReport base_report(const HyperDatum& hd, long p, long s, const std::string& check) {
    CongruenceReport r;
    r.datum = hd.id();
    r.prime = p;
    r.s = s;
    r.check = check;
    return r;
}

void run_theorem(const HyperDatum& hd, long p, const std::vector<long>& svals,
                 std::vector<CongruenceReport>& out) {
    const auto d = order_datum(hd, p);
    for (long s : svals) {
        auto rep = base_report(hd, p, s, "theorem");
        const auto t0 = std::chrono::steady_clock::now();
        const auto th = check_theorem(d, s);
        rep.lhs = th.lhs.get_str();
        rep.rhs = th.rhs.get_str();
        rep.modulus = pow_int(p, 3).get_str();
        rep.status = th.holds ? "holds" : "fails";
        rep.ms = ms_since(t0);
        out.push_back(std::move(rep));
    }
}

void run_csums(const HyperDatum& hd, long p, std::vector<CongruenceReport>& out) {
    const auto d = order_datum(hd, p);
    const auto t0 = std::chrono::steady_clock::now();
    GammaContext ctx(p, 12);
    const auto c = c_coefficients(d, j_values(d, ctx));
    const Int mod = pow_int(p, 3);
    for (const auto& [name, value] : {std::pair<const char*, const PadicValue&>{"csum_C1", c.C1},
                                      {"csum_C2", c.C2}}) {
        auto rep = base_report(hd, p, 0, name);
        rep.lhs = value.residue_mod(3).get_str();
        rep.rhs = "0";
        rep.modulus = mod.get_str();
        rep.status = value.is_zero_mod(3) ? "holds" : "fails";
        rep.ms = ms_since(t0) / 2;
        out.push_back(std::move(rep));
    }
}

void run_residues(const HyperDatum& hd, long p, std::vector<CongruenceReport>& out) {
    const auto d = order_datum(hd, p);
    GammaContext ctx(p, 12);
    const auto J = j_values(d, ctx);
    for (int i : {1, 2}) {
        const auto t0 = std::chrono::steady_clock::now();
        auto [num, den] = build_R(d, i);
        const auto pf = decompose(num, den, d, i);
        const bool reassembled = reassembly_check(pf, num, den, d);
        const auto dk = dk_valuation_check(pf, i, p);
        const auto rc = residue_to_C_check(d, i, J);
        auto rep = base_report(hd, p, i, "residues_R" + std::to_string(i));
        rep.lhs = rc.scaled_sum.get_str();
        rep.rhs = rc.c_value.get_str();
        rep.modulus = pow_int(p, 3).get_str();
        rep.status = (reassembled && dk.bound_holds && rc.residue_sum_zero && rc.matches_c)
                         ? "holds"
                         : "fails";
        rep.ms = ms_since(t0);
        out.push_back(std::move(rep));
    }
}

void run_gamma(long p, std::vector<CongruenceReport>& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const long N = 6;
    GammaContext ctx(p, N);
    std::mt19937 rng(2024 + p);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        Int rep = 0;
        for (long d = 0; d < N; ++d) rep = rep * p + static_cast<long>(rng() % p);
        const Rat x{rep};
        const PadicValue ratio = ctx.gamma(x + 1) / ctx.gamma(x);
        const Rat expect = (rep % p == 0) ? Rat(-1) : -x;
        ok = ok && ratio.congruent_mod(PadicValue::from_rational(expect, p, N), N);
        const PadicValue refl = ctx.gamma(x) * ctx.gamma(1 - x);
        const long sgn = reflection_exponent(x, p) % 2 == 0 ? 1 : -1;
        ok = ok && refl.congruent_mod(PadicValue::from_rational(Rat(sgn), p, N), N);
    }
    CongruenceReport rep;
    rep.datum = "-";
    rep.prime = p;
    rep.s = 0;
    rep.check = "gamma_identities";
    rep.lhs = ok ? "0" : "1";
    rep.rhs = "0";
    rep.modulus = pow_int(p, N).get_str();
    rep.status = ok ? "holds" : "fails";
    rep.ms = ms_since(t0);
    out.push_back(std::move(rep));
}

void run_conjectures(const Options& opt, const HyperDatum& hd, long p,
                     const std::vector<long>& svals, bool is12,
                     std::vector<CongruenceReport>& out) {
    const auto att = form_for_datum(hd);
    if (!att) {
        auto rep = base_report(hd, p, is12 ? 1 : svals.front(),
                               is12 ? "conjecture12" : "conjecture15");
        rep.status = "skipped:no-form-data";
        out.push_back(std::move(rep));
        return;
    }
    const auto path = std::filesystem::path(coeffs_dir(opt)) / (att->label + ".coeffs");
    const auto form = load_coefficients(path);
    const auto d = order_datum(hd, p);
    auto emit = [&](long s) {
        auto rep = base_report(hd, p, s, is12 ? "conjecture12" : "conjecture15");
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const auto cr = is12 ? check_conjecture_1_2(d, form) : check_conjecture_1_5(d, s, form);
            if (cr.skipped) {
                rep.status = "skipped:" + cr.skip_reason;
            } else {
                rep.lhs = cr.lhs.get_str();
                rep.rhs = cr.rhs.get_str();
                rep.modulus = cr.modulus.get_str();
                rep.status = cr.holds ? "holds" : "fails";
                if (!cr.note.empty()) rep.status += cr.holds ? "" : ":" + cr.note;
            }
        } catch (const NonOrdinary&) {
            rep.status = "skipped:nonordinary";
        } catch (const NoFormData& e) {
            rep.status = "skipped:no-coefficient";
        }
        rep.ms = ms_since(t0);
        out.push_back(std::move(rep));
    };
    if (is12)
        emit(1);
    else
        for (long s : svals) emit(s);
}

int cmd_verify(const Options& opt) {
    const auto data = select_data(opt);
    const auto svals = parse_s_list(opt.s_list);

    struct Item {
        HyperDatum hd;
        long p;
    };
    std::vector<Item> items;
    bool any_primes = false;
    for (const auto& hd : data)
        for (long p : select_primes(opt, hd)) {
            items.push_back({hd, p});
            any_primes = true;
        }
    if (opt.suite == "gamma") {
        items.clear();
        const auto [lo, hi] = parse_prime_range(opt.primes);
        for (long p = std::max<long>(lo, 3); p <= hi; ++p)
            if (is_prime(p) && p >= 7) {
                items.push_back({HyperDatum::canonical_six()[0], p});
                any_primes = true;
            }
    }
    if (!any_primes) {
        std::cerr << "error: no usable primes (>= 7, coprime to parameter denominators) in range "
                  << opt.primes << "\n";
        return 2;
    }

    std::vector<std::vector<CongruenceReport>> results(items.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> data_error{false};
    std::string data_error_msg;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= items.size() || data_error) break;
            const auto& it = items[idx];
            try {
                if (opt.suite == "theorem")
                    run_theorem(it.hd, it.p, svals, results[idx]);
                else if (opt.suite == "csums")
                    run_csums(it.hd, it.p, results[idx]);
                else if (opt.suite == "residues")
                    run_residues(it.hd, it.p, results[idx]);
                else if (opt.suite == "gamma")
                    run_gamma(it.p, results[idx]);
                else
                    run_conjectures(opt, it.hd, it.p, svals, opt.suite == "conjecture12",
                                    results[idx]);
            } catch (const Error& e) {
                std::lock_guard<std::mutex> lk(err_mu);
                data_error = true;
                data_error_msg = e.what();
            }
        }
    };
    const int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (data_error) {
        std::cerr << "error: " << data_error_msg << "\n";
        return 3;
    }

    std::vector<CongruenceReport> reports;
    for (auto& chunk : results)
        for (auto& r : chunk) reports.push_back(std::move(r));
    sort_reports(reports);
    const std::string text =
        opt.format == "csv" ? reports_to_csv(reports) : reports_to_json(reports);
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out);
        if (!f) {
            std::cerr << "error: cannot write " << opt.out << "\n";
            return 3;
        }
        f << text;
    }
    long fails = 0, holds = 0, skipped = 0;
    for (const auto& r : reports) {
        if (r.status == "fails") ++fails;
        else if (r.status.rfind("skipped", 0) == 0) ++skipped;
        else ++holds;
    }
    std::cerr << opt.suite << ": " << holds << " hold, " << fails << " fail, " << skipped
              << " skipped\n";
    return any_failure(reports) ? 1 : 0;
}

int cmd_profile(const Options& opt, long prime) {
    const auto hd = HyperDatum::parse(opt.hd);
    if (!hd.valid_prime(prime)) {
        std::cerr << "error: invalid prime " << prime << " for " << hd.id() << "\n";
        return 2;
    }
    const auto svals = parse_s_list(opt.s_list);
    const auto d = order_datum(hd, prime);
    const auto prof = valuation_profile(d, svals.front());
    const auto csv = prof.to_csv();
    if (opt.out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(opt.out);
        if (!f) {
            std::cerr << "error: cannot write " << opt.out << "\n";
            return 3;
        }
        f << csv;
    }
    return 0;
}

int cmd_datum(const Options& opt, long prime) {
    const auto hd = HyperDatum::parse(opt.hd);
    if (!hd.canonical)
        std::cout << "warning: non-canonical datum; identity failures reported, not fatal\n";
    if (!is_prime(prime) || prime < 7 || hd.denominator_lcm() % prime == 0) {
        std::cerr << "error: invalid prime " << prime << " for " << hd.id() << "\n";
        return 2;
    }
    const auto d = order_datum(hd, prime);
    std::cout << "datum " << hd.id() << " at p = " << prime << "\n";
    std::cout << "  r  =";
    for (const auto& r : d.r) std::cout << " " << r;
    std::cout << "\n  r' =";
    for (const auto& r : d.r_dash) std::cout << " " << r;
    std::cout << "\n  q  =";
    for (const auto& q : d.q) std::cout << " " << q;
    std::cout << "\n  q' =";
    for (const auto& q : d.q_dash) std::cout << " " << q;
    std::cout << "\n  t  =";
    for (long t : d.t) std::cout << " " << t;
    std::cout << "\n  u  =";
    for (long u : d.u) std::cout << " " << u;
    std::cout << "\n";
    std::cout << "  t1+t4 = t2+t3 = p-1: " << (d.t[0] + d.t[3] == prime - 1 ? "ok" : "VIOLATED")
              << "\n";
    std::cout << "  u1+u2 = p-2, u3 = u4 = p-1: "
              << (d.u[0] + d.u[1] == prime - 2 && d.u[2] == prime - 1 ? "ok" : "VIOLATED") << "\n";
    std::cout << "  u1 < t1 <= t2 = t3 <= t4 < u2 < u3: "
              << (d.warnings.empty() ? "ok" : "see warnings") << "\n";
    for (const auto& w : d.warnings) std::cout << "  warning: " << w << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic verification of hypergeometric supercongruences"};
    app.require_subcommand(1);
    Options opt;
    long prime = 7;

    auto* verify = app.add_subcommand("verify", "run a check suite over data and primes");
    verify->add_option("suite", opt.suite, "theorem|conjecture12|conjecture15|csums|residues|gamma")
        ->required()
        ->check(CLI::IsMember({"theorem", "conjecture12", "conjecture15", "csums", "residues",
                               "gamma"}));
    verify->add_option("--hd", opt.hd, "datum as r1,r2,q (rationals n/d)");
    verify->add_flag("--all", opt.all, "all six canonical data");
    verify->add_option("--primes", opt.primes, "prime range a..b (default 7..97)");
    verify->add_option("--s", opt.s_list, "comma-separated truncation depths (default 1)");
    verify->add_option("--coeffs", opt.coeffs, "coefficient directory (default $PADIC_HYPER_DATA_DIR or ./data)");
    verify->add_option("--out", opt.out, "report file (default stdout)");
    verify->add_option("--format", opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--jobs", opt.jobs, "parallel workers over (datum, prime) items");

    auto* profile = app.add_subcommand("profile", "export k -> v_p(H(k)) as CSV");
    profile->add_option("--hd", opt.hd)->required();
    profile->add_option("--prime", prime)->required();
    profile->add_option("--s", opt.s_list);
    profile->add_option("--out", opt.out);

    auto* datum = app.add_subcommand("datum", "print the ordered datum and its identities");
    datum->add_option("--hd", opt.hd)->required();
    datum->add_option("--prime", prime)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(opt);
        if (profile->parsed()) return cmd_profile(opt, prime);
        if (datum->parsed()) return cmd_datum(opt, prime);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
