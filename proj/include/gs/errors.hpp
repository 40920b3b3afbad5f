#ifndef GS_ERRORS_HPP
#define GS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gs {

// Malformed input data (edge lists, JSON documents). Carries the offending
// line number when one is known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A request that is inconsistent with the graph or with itself (target out of
// range, bad strategy, undefined metric). std::invalid_argument is reserved
// for the same class of failure raised by standard components.
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gs

#endif
