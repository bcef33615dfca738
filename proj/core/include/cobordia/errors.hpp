#ifndef COBORDIA_ERRORS_HPP
#define COBORDIA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cobordia {

/// Base class for computation errors (as opposed to input validation, which
/// reports through ValidationReport / ValidationError).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cocircular / cospherical points beyond tolerance.
class DegeneratePosition : public Error {
public:
    using Error::Error;
};

/// A slab contains no points; A and B must be non-empty.
class EmptySlice : public Error {
public:
    using Error::Error;
};

/// Dualization requires top cells of the ambient dimension.
class NotFullDimensional : public Error {
public:
    using Error::Error;
};

/// A filtration step's kernel event triple matches no admissible column;
/// signals a broken upstream computation or invalid input.
class InvalidEventTriple : public Error {
public:
    using Error::Error;
};

/// Pairing reduction contradicts the event classification.
class PairingMismatch : public Error {
public:
    using Error::Error;
};

/// Representative query for a cell that is not a double column.
class NotADeath : public Error {
public:
    using Error::Error;
};

/// Infinite-bar representative query for a cell that is not an unmatched
/// birth.
class NotInfinite : public Error {
public:
    using Error::Error;
};

/// Dense oracle invoked beyond its intended size.
class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace cobordia

#endif
