#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace discourse {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed `.dis` / PTB / model text. Carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Unknown fine-grained relation label.
class MappingError : public Error {
 public:
  using Error::Error;
};

/// Discourse tree violates a structural invariant (e.g. two satellites).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Illegal parser transition.
class TransitionError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent corpus data; names the offending document.
class DataError : public Error {
 public:
  DataError(std::string document_id, const std::string& what)
      : Error(document_id.empty() ? what : "document '" + document_id + "': " + what),
        document_id_(std::move(document_id)) {}

  const std::string& document_id() const noexcept { return document_id_; }

 private:
  std::string document_id_;
};

/// Optimizer hit a non-finite objective; keeps the offending iterate.
class OptimizationError : public Error {
 public:
  OptimizationError(const std::string& what, std::vector<double> iterate)
      : Error(what), iterate_(std::move(iterate)) {}

  const std::vector<double>& iterate() const noexcept { return iterate_; }

 private:
  std::vector<double> iterate_;
};

}  // namespace discourse
