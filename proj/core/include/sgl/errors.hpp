#pragma once

#include <stdexcept>
#include <string>

namespace sgl {

/// Operands live over different fields or in different ambient spaces.
class MismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A caller broke a documented precondition (unknown label, non-homogeneous generator, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structural guarantee that must hold for every valid algebra did not.
/// Seeing one means there is a bug upstream (usually in validation).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed textual input. `where` is a JSON-path style location.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

}  // namespace sgl
