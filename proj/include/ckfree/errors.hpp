#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ckfree {

// Base of every exception thrown by the library.  The CLI maps each
// subclass onto a distinct exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters outside an operation's mathematical domain (k < 7, n too small).
class DomainError : public Error {
public:
    using Error::Error;
};

// A graph or rotation system violates a structural invariant.
class StructuralError : public Error {
public:
    using Error::Error;
};

// A caller broke an operation's precondition (e.g. a non-triangular face).
class ContractError : public Error {
public:
    using Error::Error;
};

// A configured size limit would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Malformed serialized input.  offset is a byte offset for graph6 and a
// 1-based line number for the line-oriented planar format.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
    : Error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace ckfree
