#ifndef EQSYM_ERRORS_HPP
#define EQSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eqsym {

/// Operands belong to rings with different numbers of variables.
class DimensionMismatch : public std::invalid_argument {
public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// An argument violates a documented precondition (index range, ballot
/// requirement, malformed pairing, ...).
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration request exceeds the configured size cap.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eqsym

#endif
