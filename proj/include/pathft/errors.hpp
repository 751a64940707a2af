#pragma once

#include <stdexcept>
#include <string>

namespace pathft {

// Base class for all pathft errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A resolution parameter (H or Hp) is odd.
struct OddParameter : Error {
    using Error::Error;
};

// Hp missing for a level-2 lattice kind.
struct MissingParameter : Error {
    using Error::Error;
};

// Operation applied to a lattice of the wrong kind.
struct WrongLatticeKind : Error {
    using Error::Error;
};

// Two grid functions live on different lattices.
struct LatticeMismatch : Error {
    using Error::Error;
};

// Two path-space objects live on different spaces.
struct SpaceMismatch : Error {
    using Error::Error;
};

// Dense enumeration of X refused: path count exceeds the guard.
struct SpaceTooLarge : Error {
    using Error::Error;
};

// Operation requires the other transform variant.
struct WrongVariant : Error {
    using Error::Error;
};

// Index or parameter outside its legal range.
struct OutOfRange : Error {
    using Error::Error;
};

// Integer result does not fit in 64 bits.
struct Overflow : Error {
    using Error::Error;
};

// Brute-force size limit exceeded.
struct TooLarge : Error {
    using Error::Error;
};

// Malformed input file.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace pathft
