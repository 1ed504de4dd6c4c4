#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lukra {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments: out-of-range indices, n < 2, malformed tables.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// An operation needs a table the algebra does not carry (usually Δ).
class ConfigurationError : public Error {
public:
    using Error::Error;
};

// Input does not satisfy the axioms an operation relies on.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A guard refused the work.  Raise the limit with LUKRA_GUARD.
class SizeError : public Error {
public:
    using Error::Error;
};

class SignatureMismatch : public Error {
public:
    using Error::Error;
};

// Something that should be impossible given the invariants.
class InternalError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// A counting formula produced a value that cannot be a cardinality.
class FormulaReadingError : public Error {
public:
    using Error::Error;
};

}  // namespace lukra
