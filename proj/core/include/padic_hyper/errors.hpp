#pragma once

#include <stdexcept>
#include <string>

namespace padic_hyper {

// All library errors derive from Error so callers can catch one type at the
// CLI boundary and map it to an exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument expected to lie in Z_p has negative valuation.
struct NonIntegralError : Error {
    using Error::Error;
};

// A result would carry fewer than one significant p-adic digit, or a caller
// asked for more digits than a value is guaranteed to.
struct PrecisionExhausted : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// A prime incompatible with a hypergeometric datum (p < 7, composite, or
// sharing a factor with a parameter denominator).
struct InvalidPrime : Error {
    using Error::Error;
};

// One of the ordering/interlacing identities failed for a datum/prime pair.
struct StructureViolation : Error {
    using Error::Error;
};

// The (1 + b/q2') factor vanishes p-adically beyond working precision;
// callers must switch to the modified inner sum.
struct PoleAtB : Error {
    using Error::Error;
};

struct SingularSystem : Error {
    using Error::Error;
};

// A denominator root outside the catalogued pole set (construction bug).
struct UnexpectedPole : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

struct BoundViolation : Error {
    using Error::Error;
};

struct DuplicatePrime : Error {
    using Error::Error;
};

struct NonOrdinary : Error {
    using Error::Error;
};

struct NoFormData : Error {
    using Error::Error;
};

}  // namespace padic_hyper
