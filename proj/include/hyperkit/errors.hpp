#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperkit {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters or malformed input documents. The CLI maps these to exit
// code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Requests that are structurally impossible on the given hypergraph or
// process state. The CLI maps these to exit code 3.
class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyEdgeError : public ValidationError {
 public:
  EmptyEdgeError() : ValidationError("hyperedge must contain at least one vertex") {}
};

class UnknownVertexError : public DomainError {
 public:
  explicit UnknownVertexError(std::uint64_t v)
      : DomainError("vertex " + std::to_string(v) + " does not exist") {}
};

class UnknownEdgeError : public DomainError {
 public:
  UnknownEdgeError() : DomainError("hyperedge does not exist") {}
};

class UnknownLayerError : public DomainError {
 public:
  explicit UnknownLayerError(std::size_t index)
      : DomainError("layer " + std::to_string(index) + " does not exist") {}
};

class InvalidInterlinkError : public ValidationError {
 public:
  explicit InvalidInterlinkError(const std::string& what) : ValidationError(what) {}
};

class InvalidProbabilityError : public ValidationError {
 public:
  explicit InvalidProbabilityError(double p)
      : ValidationError("probability must lie in [0, 1], got " + std::to_string(p)) {}
};

class InvalidBoundError : public ValidationError {
 public:
  InvalidBoundError(std::size_t k, std::size_t n)
      : ValidationError("edge-size bound k=" + std::to_string(k) +
                        " must satisfy 1 <= k <= n with n=" + std::to_string(n)) {}
};

class TooLargeError : public ValidationError {
 public:
  explicit TooLargeError(const std::string& what) : ValidationError(what) {}
};

class EmptyHypergraphError : public DomainError {
 public:
  EmptyHypergraphError() : DomainError("operation requires at least one vertex") {}
};

class NoEdgesError : public DomainError {
 public:
  NoEdgesError() : DomainError("operation requires at least one hyperedge") {}
};

class UnknownModeError : public ValidationError {
 public:
  explicit UnknownModeError(const std::string& mode)
      : ValidationError("unknown expansion mode '" + mode + "', expected clique or star") {}
};

class IsolatedVertexError : public DomainError {
 public:
  explicit IsolatedVertexError(std::uint64_t v)
      : DomainError("vertex " + std::to_string(v) +
                    " is isolated; the walk transition matrix is undefined") {}
};

class DisconnectedDenominatorError : public DomainError {
 public:
  explicit DisconnectedDenominatorError(std::uint64_t v)
      : DomainError("vertex " + std::to_string(v) +
                    " has no co-members in any hyperedge; its transition row is undefined") {}
};

class UnlabeledVertexError : public DomainError {
 public:
  explicit UnlabeledVertexError(std::uint64_t v)
      : DomainError("vertex " + std::to_string(v) + " carries no label") {}
};

class NoUnlabeledVertexError : public DomainError {
 public:
  NoUnlabeledVertexError() : DomainError("a move is required but no vertex is unlabeled") {}
};

class LengthMismatchError : public ValidationError {
 public:
  LengthMismatchError(std::size_t a, std::size_t b)
      : ValidationError("sequences must have equal length, got " + std::to_string(a) +
                        " and " + std::to_string(b)) {}
};

class EmptyInputError : public ValidationError {
 public:
  EmptyInputError() : ValidationError("input sequence must not be empty") {}
};

class ParseError : public ValidationError {
 public:
  explicit ParseError(const std::string& what) : ValidationError("parse error: " + what) {}
};

class SchemaError : public ValidationError {
 public:
  explicit SchemaError(const std::string& what) : ValidationError("schema error: " + what) {}
};

class IoError : public ValidationError {
 public:
  explicit IoError(const std::string& what) : ValidationError(what) {}
};

}  // namespace hyperkit
