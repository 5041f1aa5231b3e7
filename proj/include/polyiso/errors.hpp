#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace polyiso {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based; column 0 means the
/// whole line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structurally invalid vertex-facet incidences.
class InvalidIncidence : public Error {
 public:
  enum class Kind {
    too_small,
    empty_facet,
    index_out_of_range,
    repeated_index,
    facet_equals_vertex_set,
    duplicate_facet,
    facet_containment,
    uncovered_vertex,
  };

  InvalidIncidence(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// The input failed a necessary condition for being the face lattice of a
/// polytope. Results computed from such input are undefined.
class NotPolytopal : public Error {
 public:
  NotPolytopal(std::string condition, std::string witness)
      : Error("not polytopal (" + condition + " failed): " + witness),
        condition_(std::move(condition)),
        witness_(std::move(witness)) {}

  const std::string& condition() const noexcept { return condition_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string condition_;
  std::string witness_;
};

/// Inputs violate an algorithm's precondition (for example a non-simple
/// polytope handed to the simple-polytope algorithm).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force reference search refused an instance above its size cap.
class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace polyiso
