#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "padic_hyper/datum.hpp"
#include "padic_hyper/padic.hpp"

namespace padic_hyper {

// Kronecker symbol (d/p).
int kronecker_chi(long d, long p);

struct Character {
    enum class Kind { Trivial, Kronecker };
    Kind kind = Kind::Trivial;
    long d = 0;

    int at(long p) const { return kind == Kind::Trivial ? 1 : kronecker_chi(d, p); }
    std::string str() const;
    static Character parse(const std::string& text);
};

// Fourier coefficients a_p of one weight-4 newform, indexed by prime.
struct ModularFormData {
    std::string label;
    int weight = 4;
    Character chi;
    std::map<long, Int> ap;

    const Int& coefficient(long p) const;  // throws NoFormData when absent
};

// Plain-text format: header "label,weight,character", then "p,a_p" lines
// with p strictly ascending.  Character is "trivial" or "kronecker:<d>".
ModularFormData load_coefficients(const std::filesystem::path& path);
void write_coefficients(const ModularFormData& form, const std::filesystem::path& path);

// The newform attached to a datum, when one is on file: label plus the
// twisting character entering p F_1 ≡ chi(p) a_p.
struct FormAttachment {
    std::string label;
    Character chi;
};
std::optional<FormAttachment> form_for_datum(const HyperDatum& hd);

struct UnitRoot {
    long p = 0;
    long s = 0;
    PadicValue gamma;
};

// The unit root mod p^s of T^2 - a_p T + chi_p p^3, by the fixed-point
// iteration gamma <- a_p - chi_p p^3 / gamma started at gamma = a_p.
// Requires p ∤ a_p (NonOrdinary otherwise).
UnitRoot unit_root(const Int& ap, int chi_p, long p, long s);

struct ConjReport {
    std::string check;
    long p = 0;
    long s = 0;
    bool holds = false;
    bool skipped = false;
    std::string skip_reason;
    Int lhs, rhs, modulus;
    // Conjecture 1.5 carries a normalization question: chi on the linear or
    // on the constant coefficient of the Frobenius quadratic.  `note` records
    // when only the alternative normalization validates.
    std::string note;
};

// p F_1 ≡ chi(p) a_p (mod p^3).
ConjReport check_conjecture_1_2(const OrderedDatum& d, const ModularFormData& form);

// p F_s / F_{s-1} ∈ Z_p and ≡ gamma_p (mod p^s).
ConjReport check_conjecture_1_5(const OrderedDatum& d, long s, const ModularFormData& form);

}  // namespace padic_hyper
