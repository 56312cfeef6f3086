#pragma once

#include <stdexcept>
#include <string>

namespace chroma {

// Raised when an instance exceeds a configured size cap. Never a wrong answer.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what)
        : std::runtime_error("instance too large: " + what) {}
};

class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace chroma
