#pragma once

#include <stdexcept>
#include <string>

namespace calg {

// Error taxonomy; tools/calg maps these onto process exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed in-memory inputs: ring mismatches, shape violations.
struct StructuralError : Error {
    using Error::Error;
};

// Text input rejected.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int l, int c)
        : Error(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"),
          line(l), column(c) {}
};

// Operation invoked outside its contract.
struct PreconditionError : Error {
    using Error::Error;
};

// Internal consistency check failed; indicates an engine bug.
struct InvariantViolation : Error {
    using Error::Error;
};

} // namespace calg
