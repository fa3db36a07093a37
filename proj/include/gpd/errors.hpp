#ifndef GPD_ERRORS_HPP
#define GPD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpd {

// Error classes map 1:1 onto CLI exit codes; see exit_code_for().
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed (bad JSON, unknown label, malformed record).
class ParseError : public Error {
public:
  using Error::Error;
};

// Tables fail the category/groupoid axioms (associativity, inverses,
// range/source bookkeeping, duplicate labels).
class AxiomViolation : public Error {
public:
  using Error::Error;
};

// A graph vertex emits no edge, so it carries no ray.
class SourceVertex : public Error {
public:
  using Error::Error;
};

// Precondition failures on otherwise well-formed data.
class PreconditionError : public Error {
public:
  using Error::Error;
};

class GroupoidMismatch : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class GraphMismatch : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NotABisection : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NotInvariant : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class SupportViolation : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class EmptyGroupoid : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class DepthTooSmall : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class BadPair : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NotAGroup : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NotBijective : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// A brute-force search was asked to run past its documented size cap.
class ComplexityRefusal : public Error {
public:
  using Error::Error;
};

enum class ExitCode : int {
  ok = 0,
  parse_error = 2,
  axiom_violation = 3,
  precondition = 4,
  complexity_refusal = 5,
  io_error = 6,
  usage = 64,
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return static_cast<int>(ExitCode::parse_error);
  if (dynamic_cast<const AxiomViolation*>(&e)) return static_cast<int>(ExitCode::axiom_violation);
  if (dynamic_cast<const SourceVertex*>(&e)) return static_cast<int>(ExitCode::axiom_violation);
  if (dynamic_cast<const ComplexityRefusal*>(&e)) return static_cast<int>(ExitCode::complexity_refusal);
  if (dynamic_cast<const PreconditionError*>(&e)) return static_cast<int>(ExitCode::precondition);
  return static_cast<int>(ExitCode::io_error);
}

}  // namespace gpd

#endif  // GPD_ERRORS_HPP
