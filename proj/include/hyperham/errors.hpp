#pragma once

#include <stdexcept>
#include <string>

namespace hyperham {

/// A query whose arguments are outside the operation's domain
/// (wrong subset size, vertex out of range, ...).
class InvalidQuery : public std::invalid_argument {
public:
    explicit InvalidQuery(const std::string& what) : std::invalid_argument(what) {}
};

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hyperham
