#pragma once

#include <stdexcept>
#include <string>

namespace slinf {

/// Invalid argument to a mathematical operation (bad position, wrong order
/// kind, non-dominant weight where a dominant one is required, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, unsigned long long cap)
        : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
    unsigned long long cap() const noexcept { return cap_; }

private:
    unsigned long long cap_;
};

class DecompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when two exact computations that must agree do not.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace slinf
