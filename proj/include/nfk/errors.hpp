#pragma once

#include <stdexcept>

namespace nfk {

// Caller mistakes: malformed specs, values outside a documented
// precondition. The CLI maps these to exit code 2.
struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested computation exceeds a configured size bound. Exit code 3.
struct bound_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An invariant that should be unreachable failed; always a bug or a
// corrupted table, never a usage error.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace nfk
