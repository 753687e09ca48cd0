#pragma once

#include <stdexcept>
#include <string>

namespace primor {

// Malformed argument values: out-of-range vertex ids, self-loops, duplicate
// edges, bad generator parameters.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A semantic precondition does not hold: the set is not a module, the base
// set does not induce a prime subgraph, the graph is not primarily
// orientable, and so on.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// A certified construction failed its own certificate. Always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Malformed input document; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace primor
