#pragma once

#include <stdexcept>
#include <string>

namespace lie {

// Bad user input: unknown type string, inadmissible rank, malformed weight,
// size guard exceeded.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A mathematical invariant failed to hold. These are unreachable on correct
// input data; throwing here is a bug signal, not a user error.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace lie
