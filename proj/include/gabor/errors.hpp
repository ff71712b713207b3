#pragma once

#include <stdexcept>
#include <string>

namespace gabor {

// Root of the library's error hierarchy. Every throwing path in the
// library raises a subclass of Error; anything else escaping is a bug.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Lattice parameters that do not divide the signal length.
struct DivisibilityError : Error {
    using Error::Error;
};

// Mismatched signal/window/grid dimensions.
struct DimensionError : Error {
    using Error::Error;
};

// Time or channel index outside the lattice.
struct IndexError : Error {
    using Error::Error;
};

// NaN or infinity where a finite value is required.
struct NonFiniteError : Error {
    using Error::Error;
};

// Lattice with density > 1 handed to a reconstruction path.
struct UnsupportedLatticeError : Error {
    using Error::Error;
};

// Zero or otherwise meaningless input (zero signal, zero noise, ...).
struct DegenerateInputError : Error {
    using Error::Error;
};

// Rank-deficient constraint system; no dual window exists.
struct SingularSystemError : Error {
    using Error::Error;
};

// Window pair that does not satisfy biorthogonality to tolerance.
struct InvalidPairError : Error {
    using Error::Error;
};

// Invalid experiment or run configuration.
struct ConfigurationError : Error {
    using Error::Error;
};

// File input/output failure; message names the path and, where
// meaningful, the line number.
struct IoError : Error {
    using Error::Error;
};

}  // namespace gabor
