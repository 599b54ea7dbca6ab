#pragma once

#include <stdexcept>
#include <string>

namespace unmix {

/// Invalid user input or violated operation precondition. CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size or node budget was exceeded. CLI exit code 3.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace unmix
