#pragma once

#include <stdexcept>
#include <string>

namespace crdyn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed instance text, bad rational literal, unknown field.
struct ParseError : Error {
    using Error::Error;
};

// An operation was called outside its domain (illegal start point, bad index, ...).
struct PreconditionError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

// Input too large for an exhaustive procedure (oracle state cap, box-count cap).
struct SizeExceeded : Error {
    using Error::Error;
};

struct BudgetExhausted : Error {
    using Error::Error;
};

} // namespace crdyn
