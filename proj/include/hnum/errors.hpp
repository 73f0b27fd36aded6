#pragma once

#include <stdexcept>
#include <string>

namespace hnum {

// Bad user input: malformed partition/permutation/sign strings.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally invalid request: degenerate branch data (r <= 0 or
// non-integer), parity mismatch, degree cap exceeded.
struct DegenerateError : std::domain_error {
    using std::domain_error::domain_error;
};

// A "must never fire" condition fired (e.g. the unique-decomposition
// lemma produced zero or two candidates).  Always a bug or a broken
// invariant, never a user error.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// Counter left the 128-bit safety range.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

} // namespace hnum
