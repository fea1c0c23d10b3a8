#pragma once

#include <stdexcept>
#include <string>

namespace clusterkit {

// Exit codes surfaced by the CLI.
enum class ExitCode : int {
    ok = 0,
    parse_error = 2,
    validation_failure = 3,
    precondition_failure = 4,
    internal_invariant = 5,
};

// Malformed input document (syntax or schema).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally well-formed input violating a declared invariant.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation called outside its stated preconditions.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verified internal invariant failed; indicates a bug, never user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace clusterkit
