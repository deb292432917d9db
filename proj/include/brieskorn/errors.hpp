#pragma once

#include <stdexcept>
#include <string>

namespace brieskorn {

// Bad user input: rejected preconditions, malformed values. CLI maps to exit 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated internal invariant (convention bug, not user error). CLI maps to exit 1.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw validation_error(msg);
}

inline void ensure(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

} // namespace brieskorn
