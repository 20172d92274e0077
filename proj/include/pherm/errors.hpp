#pragma once

#include <stdexcept>
#include <string>

namespace pherm {

// Base class for every domain error thrown by this library. Anything else
// escaping a pherm:: function (std::bad_alloc aside) is a bug.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A NaN or Inf component reached a public entry point.
struct NonFinite : Error {
    using Error::Error;
};

// |det| below the singularity threshold where an inverse was required.
struct SingularMatrix : Error {
    using Error::Error;
};

// tr[H]^2 - 4 det[H] vanishes within tolerance: the eigensystem is
// defective (or about to be, numerically) and every downstream
// construction is refused rather than stabilized.
struct ExceptionalPoint : Error {
    using Error::Error;
};

// The requested case label is not admitted by the classification of H,
// or a catalog oracle was asked for a case outside its parameter regime.
struct CaseMismatch : Error {
    using Error::Error;
};

// Both eigenvector frames are numerically unusable (should be unreachable
// for a non-exceptional H; kept as a hard error, never silently patched).
struct DegenerateFrame : Error {
    using Error::Error;
};

// A supplied or constructed frame vector fails its unit/orthogonality
// contract, or the automatic construction has no direction to work with.
struct InvalidPerpVector : Error {
    using Error::Error;
};

// The normalization-constant combinations in a ratio position vanish
// while a complex metric phase makes them load-bearing.
struct DegenerateNormalizationRatio : Error {
    using Error::Error;
};

// A parameter whose imaginary part is constrained to a lattice of values
// (e.g. integer multiples of pi) was given something else.
struct InvalidImaginaryPart : Error {
    using Error::Error;
};

// Unknown catalog name (or similar lookup failure).
struct NotFound : Error {
    using Error::Error;
};

// Malformed textual input (JSON, complex-number literals, grid specs).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace pherm
