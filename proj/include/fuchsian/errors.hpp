#pragma once

#include <stdexcept>
#include <string>

namespace fuchsian {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller passed a value outside an operation's domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Zero determinant.
class DegenerateMap : public Error {
public:
    using Error::Error;
};

class CoincidentPoints : public Error {
public:
    using Error::Error;
};

// Evaluation at a pole (Gamma at a nonpositive integer, FDE coefficient at a root).
class PoleError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Normalized trace is not real, so the map has no trace class.
class ClassificationError : public Error {
public:
    using Error::Error;
};

// A precondition of the group construction failed (e.g. a product that is
// not hyperbolic, or a fixed point that is not on its geodesic).
class AlgorithmError : public Error {
public:
    using Error::Error;
};

// No regular tessellation exists for the requested parameters.
class NoTessellation : public Error {
public:
    using Error::Error;
};

} // namespace fuchsian
