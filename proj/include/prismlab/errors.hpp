#pragma once

#include <stdexcept>
#include <string>

namespace prismlab {

/// Requested dimension lies outside the range a complex actually has.
class EmptyDomainError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Parameters (N, r) that cannot describe the requested object.
class DegenerateSpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A cell of the wrong dimension was handed to an operation.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Orientation strings that are not permutations of one another.
class IncomparableStringsError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An S_r orbit whose size is not r!, i.e. the action is not free.
class FreenessViolationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Linear Tverberg guarantees a partition but none was found.
class TheoremViolationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace prismlab
