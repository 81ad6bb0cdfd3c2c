#pragma once

#include <stdexcept>
#include <string>

namespace motive {

// Error taxonomy shared by the library and the CLI exit-code mapping.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input documents (bad JSON shape, missing fields).
class ParseError : public Error {
public:
  using Error::Error;
};

// Inputs that parse but violate a precondition (illegal Dynkin type,
// node index out of range, non-dominant cocharacter, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

// Work refused because it would exceed a configured cap.
class ResourceError : public Error {
public:
  using Error::Error;
};

// An internal consistency check failed.  These checks guard equalities
// that hold for every valid input, so a throw here signals a bug in the
// implementation, never bad user input.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

} // namespace motive
