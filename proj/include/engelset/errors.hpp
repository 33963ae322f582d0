#pragma once

#include <stdexcept>
#include <string>

namespace engelset {

// Bad user input: malformed rationals, sequence rule violations, parameter
// constraints (0 < delta < a < b), schema mismatches.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A window was asked to answer a question it cannot certify: a requested
// ball or nearest-point scan is not fully covered by the generated box.
class InsufficientWindowError : public std::runtime_error {
public:
    explicit InsufficientWindowError(const std::string& what) : std::runtime_error(what) {}
};

// Point-count guard tripped. Raise the cap explicitly to proceed.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace engelset
