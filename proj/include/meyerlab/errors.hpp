#pragma once

#include <stdexcept>
#include <string>

namespace meyerlab {

// Bad input or an operation called outside its supported domain.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured enumeration or search limit was hit.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Interval refinement reached the precision cap without deciding an inequality.
class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested configuration is well-formed but deliberately not handled
// (non-aligned subgroups, finite places of fields other than Q, ...).
class Unsupported : public UsageError {
public:
    using UsageError::UsageError;
};

}  // namespace meyerlab
