#pragma once

#include <stdexcept>
#include <string>

namespace exotic {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two scalars from different cyclotomic fields were combined without promotion.
struct ConductorMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// galois_apply with k not coprime to the conductor.
struct NotCoprime : Error {
    using Error::Error;
};

// Group closure exceeded the max_order bound (infinite or huge group).
struct ClosureExceeded : Error {
    using Error::Error;
};

struct NotASubgroup : Error {
    using Error::Error;
};

// The requested 2-dimensional irrep has multiplicity zero at this spin.
struct NoIrrepAvailable : Error {
    using Error::Error;
};

// Family construction requested at even n.
struct EvenN : Error {
    using Error::Error;
};

// An exact computation produced something structurally impossible
// (e.g. a non-integer irrep multiplicity).  Always a bug, never user input.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct SizeBoundExceeded : Error {
    using Error::Error;
};

struct MalformedFile : Error {
    using Error::Error;
};

} // namespace exotic
