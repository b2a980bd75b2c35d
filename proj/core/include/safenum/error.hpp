#pragma once

#include <stdexcept>

namespace safenum {

/// Malformed or out-of-range input: bad indices, bad parameters, bad JSON.
class invalid_input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Structurally valid input outside the supported domain, e.g. a disconnected
/// graph where a connected one is required, or a closed form asked for a
/// shape it does not cover.
class unsupported_input_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Deliberate refusal to start a computation that would not finish in
/// reasonable time or space.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A postcondition the library guarantees failed to hold. Always a bug here,
/// never a caller mistake.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace safenum
