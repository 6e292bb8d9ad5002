#pragma once

#include <stdexcept>
#include <string>

namespace phinv {

// Violated precondition (bad argument for the operation's domain).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Work would exceed the configured enumeration budget.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Answer depends on the primality status of a Fermat number that is not settled.
class unsettled_error : public std::runtime_error {
public:
    unsettled_error(const std::string& msg, unsigned max_settled)
        : std::runtime_error(msg), max_settled_index(max_settled) {}
    unsigned max_settled_index;
};

}  // namespace phinv
