#pragma once

#include <stdexcept>
#include <string>

namespace superpv {

struct RingMismatchError : std::runtime_error {
  explicit RingMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct NotEvenError : std::runtime_error {
  explicit NotEvenError(const std::string& what) : std::runtime_error(what) {}
};

struct BodyNotInvertibleError : std::runtime_error {
  explicit BodyNotInvertibleError(const std::string& what) : std::runtime_error(what) {}
};

struct NotEvenMatrixError : std::runtime_error {
  explicit NotEvenMatrixError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularBodyError : std::runtime_error {
  explicit SingularBodyError(const std::string& what) : std::runtime_error(what) {}
};

struct NotPrimitiveError : std::runtime_error {
  NotPrimitiveError(const std::string& what, std::string entry)
      : std::runtime_error(what), offendingEntry(std::move(entry)) {}
  std::string offendingEntry;
};

struct InconsistentModuleError : std::runtime_error {
  explicit InconsistentModuleError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int col)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line, col;
};

}  // namespace superpv
