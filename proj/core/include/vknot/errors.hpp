#pragma once

#include <stdexcept>
#include <string>

namespace vknot {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text that does not conform to a format grammar.
struct ParseError : Error {
    using Error::Error;
};

// Structurally well-formed input that violates a domain invariant.
struct ValidationError : Error {
    using Error::Error;
};

// Operation applied to a value outside its supported domain,
// e.g. a knot-only operation on a multi-component code.
struct UnsupportedError : Error {
    using Error::Error;
};

}  // namespace vknot
