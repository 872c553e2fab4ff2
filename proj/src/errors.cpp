#include "cbc/errors.hpp"

namespace cbc {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + (column > 0 ? ", column " + std::to_string(column) : "") +
                         ": " + what),
      line_(line),
      column_(column) {}

}  // namespace cbc
