#pragma once

#include <stdexcept>
#include <string>

namespace arqkit {

/// Domain error raised by library operations; the message is meant for users.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace arqkit
