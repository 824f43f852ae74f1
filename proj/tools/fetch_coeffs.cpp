// Optional helper: downloads a_p tables for a newform label and writes the
// plain-text coefficient format used by the verifier.  The endpoint comes
// from PADIC_HYPER_LMFDB_URL; nothing in the test suite needs the network.
//
//   fetch-coeffs <label> <character> [out-dir] [max-prime]
//
// character: "trivial" or "kronecker:<d>" (recorded in the file header).

#include <cstdlib>
#include <iostream>

#include <httplib.h>
#include <json.hpp>

#include <padic_hyper/modular.hpp>

using namespace padic_hyper;

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: fetch-coeffs <label> <trivial|kronecker:d> [out-dir] [max-prime]\n";
        return 2;
    }
    const std::string label = argv[1];
    const std::string chi_text = argv[2];
    const std::string out_dir = argc > 3 ? argv[3] : "data";
    const long max_p = argc > 4 ? std::stol(argv[4]) : 200;

    const char* base = std::getenv("PADIC_HYPER_LMFDB_URL");
    if (!base) {
        std::cerr << "error: PADIC_HYPER_LMFDB_URL is not set\n";
        return 3;
    }

    try {
        httplib::Client client(base);
        client.set_follow_location(true);
        const std::string path = "/api/mf_newforms/?label=" + label + "&_format=json";
        const auto res = client.Get(path);
        if (!res || res->status != 200) {
            std::cerr << "error: request failed for " << label << "\n";
            return 3;
        }
        const auto body = nlohmann::json::parse(res->body);
        // expects {"data": [{"traces": [a_1, a_2, ...]}]}
        const auto& rows = body.at("data");
        if (rows.empty()) {
            std::cerr << "error: no rows for " << label << "\n";
            return 3;
        }
        const auto& traces = rows.at(0).at("traces");

        ModularFormData form;
        form.label = label;
        form.weight = 4;
        form.chi = Character::parse(chi_text);
        for (long p = 2; p <= max_p && p <= static_cast<long>(traces.size()); ++p) {
            if (!is_prime(p)) continue;
            form.ap[p] = Int(traces.at(p - 1).dump(), 10);  // integer literal
        }
        const auto out = std::filesystem::path(out_dir) / (label + ".coeffs");
        write_coefficients(form, out);
        std::cout << "wrote " << out.string() << " (" << form.ap.size() << " primes)\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
