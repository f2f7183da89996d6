#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dynmatch {

/// Dense vertex index in [0, n).
using VertexId = std::uint32_t;

/// Edge weight. Strictly positive; integral values are summed exactly.
using Weight = double;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
    VertexId u = kNoVertex;
    VertexId v = kNoVertex;
    Weight w = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: self-loops, out-of-range ids, non-positive weights.
class InputError : public Error {
public:
    using Error::Error;
};

class AbsentEdgeError : public Error {
public:
    using Error::Error;
};

/// A caller broke an operation precondition (e.g. matching a matched vertex).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Internal state no longer satisfies its invariants.
class CorruptionError : public Error {
public:
    using Error::Error;
};

/// Exponential enumeration refused because the instance exceeds the limits.
class LimitError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ReplayError : public Error {
public:
    using Error::Error;
};

} // namespace dynmatch
