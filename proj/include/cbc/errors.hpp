#pragma once

#include <stdexcept>
#include <string>

namespace cbc {

/// A documented precondition of an operation did not hold.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix or graph text could not be parsed. Line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace cbc
