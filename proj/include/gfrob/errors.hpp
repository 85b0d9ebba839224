#pragma once

#include <stdexcept>
#include <string>

namespace gfrob {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
    int line;
};

struct ElementOutOfModel : Error {
    using Error::Error;
};

struct NotSquare : Error {
    using Error::Error;
};

struct VariableMismatch : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidTable : Error {
    using Error::Error;
};

struct CocycleViolation : Error {
    using Error::Error;
};

} // namespace gfrob
