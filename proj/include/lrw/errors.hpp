#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lrw {

/// Operand shapes do not match (vector lengths, variable lists, ...).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation's mathematical precondition does not hold on its input.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction cannot be completed; carries the offending basis tuple.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, std::vector<std::string> witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}
    [[nodiscard]] const std::vector<std::string>& witness() const { return witness_; }

private:
    std::vector<std::string> witness_;
};

}  // namespace lrw
