#include "padic_hyper/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace padic_hyper {

void sort_reports(std::vector<CongruenceReport>& reports) {
    std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        return std::tie(a.datum, a.prime, a.s, a.check) < std::tie(b.datum, b.prime, b.s, b.check);
    });
}

std::string reports_to_json(const std::vector<CongruenceReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        arr.push_back({{"datum", r.datum},
                       {"prime", r.prime},
                       {"s", r.s},
                       {"check", r.check},
                       {"status", r.status},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"modulus", r.modulus},
                       {"ms", r.ms}});
    }
    return arr.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string reports_to_csv(const std::vector<CongruenceReport>& reports) {
    std::ostringstream os;
    os << "datum,prime,s,check,status,lhs,rhs,modulus,ms\n";
    for (const auto& r : reports) {
        os << csv_escape(r.datum) << "," << r.prime << "," << r.s << "," << r.check << ","
           << r.status << "," << r.lhs << "," << r.rhs << "," << r.modulus << "," << r.ms << "\n";
    }
    return os.str();
}

bool any_failure(const std::vector<CongruenceReport>& reports) {
    return std::any_of(reports.begin(), reports.end(),
                       [](const auto& r) { return r.status == "fails"; });
}

}  // namespace padic_hyper
