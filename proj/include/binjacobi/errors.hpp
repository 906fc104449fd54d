#pragma once

#include <stdexcept>

namespace binjacobi {

// Caller handed us something outside an operation's precondition.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal contract failed (inexact division, broken invariant): a bug,
// never bad user input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace binjacobi
