#include "opgb/errors.hpp"

namespace opgb {

namespace {
std::string located(const std::string& message, int line, int column) {
  if (line <= 0) return message;
  std::string where = "line " + std::to_string(line);
  if (column > 0) where += ", column " + std::to_string(column);
  return where + ": " + message;
}
}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(located(message, line, column)), line_(line), column_(column) {}

}  // namespace opgb
