#pragma once

#include <stdexcept>
#include <string>

namespace valspin {

// Base class for every error raised by the library.  All of them indicate a
// caller mistake or malformed input, never an internal inconsistency, except
// where a specific subclass says otherwise.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two polynomials (or characters) of different variable counts were combined.
class RankMismatchError : public Error {
public:
    explicit RankMismatchError(const std::string& what) : Error(what) {}
};

// An argument violated a stated precondition (k <= 0 for an Adams operator,
// non-orthonormal plane, malformed weight string, ...).
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(what) {}
};

// exact_divide met a non-zero remainder: the numerator is not a multiple of
// the denominator.  When raised from inside the Weyl quotient this indicates
// an implementation bug; when raised on user input it means the input was not
// an exact multiple.
class DivisionError : public Error {
public:
    explicit DivisionError(const std::string& what) : Error(what) {}
};

// decompose() was handed a polynomial that is not the character of a genuine
// representation: the peel-off loop met a non-dominant leading exponent or a
// negative leading coefficient (a virtual character, or corrupted input).
class NotCharacterError : public Error {
public:
    explicit NotCharacterError(const std::string& what) : Error(what) {}
};

// The OP^2 Klain-identity check was requested at a plane where the octonionic
// pseudo-volume has no tabulated value.
class UnsupportedPlaneError : public Error {
public:
    explicit UnsupportedPlaneError(const std::string& what) : Error(what) {}
};

} // namespace valspin
