#pragma once

#include <stdexcept>

namespace kummer {

// API misuse: mismatched truncation orders, out-of-range indices, invalid
// parameters. The CLI maps this to exit code 2.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition does not hold: inverse of a series with zero
// constant term, exp of a series with nonzero constant term, and so on.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Persisted data failed validation on load. The CLI maps this to exit code 3.
class integrity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The engine derived a value that violates a structural guarantee, e.g. a
// non-integer Euler characteristic. Always a bug in the engine, never user
// error.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A configured resource budget was exhausted before the computation finished.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace kummer
