#pragma once

#include <stdexcept>
#include <string>

namespace orbsplice {

enum class ErrorCode {
  ParseError,
  DuplicateVertex,
  UnknownVertexInEdge,
  NonPositiveWeight,
  UnknownVertex,
  UnknownEdge,
  NotBlowDownable,
  NotATree,
  SingularMatrix,
  NotNegativeDefinite,
  DecoratedInterior,
  NotALeaf,
  NoInteriorVertex,
  GenerationFailure,
  NoNodes,
  ConditionsFail,
  InvalidArgument,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + reason),
        line_(line),
        column_(column),
        reason_(reason) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

}  // namespace orbsplice
