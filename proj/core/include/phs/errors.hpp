#pragma once

#include <stdexcept>
#include <string>

namespace phs {

/// Base class for all library errors. Subclasses map to the domain
/// preconditions of the individual operations; the CLI translates them
/// into exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in Hilbert spaces of different dimension.
struct DimensionMismatch : Error {
    DimensionMismatch(int a, int b)
        : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// A vector outside H* = H \ {0} was passed where a nonzero vector is required.
struct ZeroVector : Error {
    ZeroVector() : Error("zero vector: not an element of H*") {}
};

/// Components contain NaN/Inf, or the vector is empty.
struct InvalidState : Error {
    using Error::Error;
};

/// Generic precondition violation (bad bounds, empty input, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Matrix fails the Hermitian symmetry check.
struct NotHermitian : Error {
    NotHermitian() : Error("matrix is not Hermitian within tolerance") {}
};

/// Requested more orthonormal vectors than the dimension admits.
struct CountExceedsDim : Error {
    CountExceedsDim(int count, int dim)
        : Error("orthonormal system of " + std::to_string(count) +
                " vectors does not fit in dimension " + std::to_string(dim)) {}
};

/// Phase alignment is undefined for orthogonal states.
struct OrthogonalStates : Error {
    OrthogonalStates() : Error("states are orthogonal: phase factor undefined") {}
};

/// Separation requires two distinct rays.
struct EqualStates : Error {
    EqualStates() : Error("states lie on the same ray") {}
};

/// A finite truncation cannot hold an orthonormal sequence longer than dim.
struct LengthExceedsDim : Error {
    LengthExceedsDim(int length, int dim)
        : Error("orthonormal sequence of length " + std::to_string(length) +
                " exceeds dimension " + std::to_string(dim)) {}
};

/// Sequence fails the Cauchy precondition of the completeness check.
struct NotCauchy : Error {
    using Error::Error;
};

/// Iterative eigensolver hit its sweep cap before reaching the residual target.
struct ConvergenceFailure : Error {
    using Error::Error;
};

/// Convergence analysis needs at least one probe.
struct EmptyProbes : Error {
    EmptyProbes() : Error("probe family is empty") {}
};

/// Tail window does not fit into the sequence.
struct TailTooLong : Error {
    TailTooLong(int tail, int length)
        : Error("tail " + std::to_string(tail) + " too long for sequence of length " +
                std::to_string(length)) {}
};

/// Input file or document could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace phs
