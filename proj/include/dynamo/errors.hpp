#pragma once

#include <stdexcept>
#include <string>

namespace dynamo {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A question was asked whose answer is not determined by the data at hand,
// e.g. a dynamo verdict on a capped trajectory.
class UndecidedError : public Error {
public:
    explicit UndecidedError(const std::string& what) : Error(what) {}
};

// Exact tie w*q == p*b under the rho rule. The rho model assumes the
// threshold is never hit exactly, so a hit means the chosen rational
// violates the model for this graph.
class RhoTieError : public Error {
public:
    explicit RhoTieError(const std::string& what) : Error(what) {}
};

} // namespace dynamo
