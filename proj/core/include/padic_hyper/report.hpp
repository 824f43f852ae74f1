#pragma once

#include <string>
#include <vector>

#include "padic_hyper/rational.hpp"

namespace padic_hyper {

// One line of a verification run.  Residues are decimal strings since the
// moduli outgrow native widths.
struct CongruenceReport {
    std::string datum;
    long prime = 0;
    long s = 0;
    std::string check;
    std::string status;  // holds | fails | skipped:<reason>
    std::string lhs;
    std::string rhs;
    std::string modulus;
    double ms = 0.0;
};

// Stable order: (datum, prime, s, check).
void sort_reports(std::vector<CongruenceReport>& reports);

std::string reports_to_json(const std::vector<CongruenceReport>& reports);
std::string reports_to_csv(const std::vector<CongruenceReport>& reports);

bool any_failure(const std::vector<CongruenceReport>& reports);

}  // namespace padic_hyper
