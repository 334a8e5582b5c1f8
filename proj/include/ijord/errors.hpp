#pragma once

#include <stdexcept>
#include <string>

namespace ijord {

// Error taxonomy shared by all modules.  Every precondition failure throws
// Error with a code, so callers (and tests) can dispatch on the reason.
enum class Errc {
    // ffpoly
    NonPrime,
    EvenCharacteristic,
    TooLarge,
    ZeroConstantTerm,
    NotIrreducible,
    NotSelfDualPoly,
    // lusztig
    NonTriangular,
    DimensionMismatch,
    EigenTypeMismatch,
    MissingSymplecticPlus,
    // hecke
    ContextMismatch,
    DegreeMismatch,
    NonHalfInteger,
    NotDivisible,
    // lattice
    PeriodMismatch,
    NonIntegralDimension,
    NotDivisor,
    NonIntegral,
    ZeroDeterminant,
    // jordan
    IdentityViolation,
    DuplicateEndoClass,
    // params
    NotSelfDual,
    OddDegree,
    UnpairedLabel,
    UnknownLabel,
    NoSolution,
    RegistryMissing,
    // plumbing
    InvalidArgument,
    SchemaError,
    IoError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace ijord
