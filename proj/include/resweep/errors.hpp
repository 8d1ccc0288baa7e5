#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resweep {

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A vertex with zero weighted degree.
class IsolatedVertexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DisconnectedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation invoked in a state where its precondition cannot hold.
class IllegalStateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exhaustive routine asked to run beyond its enumeration limit.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace resweep
