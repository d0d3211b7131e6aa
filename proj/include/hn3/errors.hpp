#pragma once

#include <stdexcept>
#include <string>

namespace hn3 {

/// Operand shapes do not fit together (matrix sizes, tensor valence, dimension).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that must be invertible is not.
class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A mathematical precondition of a construction does not hold, e.g. the
/// class condition that guarantees a skew-torsion natural connection.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input. `path()` is a JSON pointer when the error
/// originates inside a document, empty otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// The input file could not be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hn3
