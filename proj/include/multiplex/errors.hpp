#pragma once

#include <stdexcept>
#include <string>

namespace multiplex {

// Bad input values: labels, indices, matrix sizes.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Enumeration beyond a hard cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Malformed fixture text or unknown fixture names.
class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace multiplex
