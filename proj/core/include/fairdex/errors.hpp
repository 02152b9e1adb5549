#pragma once

#include <stdexcept>

namespace fairdex {

// Malformed input or a violated operation precondition. The CLI reports
// these with exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured budget. Raised before any
// partial answer could be mistaken for a complete one; exit code 3 in the
// CLI.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}
