#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sre {

// Raised by the expression and word parsers. `position` is a 0-based
// offset into the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Raised when a configurable resource guard trips (closure state budget,
// oracle word-set size, enumeration guard, ...). Computations that throw
// this have produced no partial result.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sre
