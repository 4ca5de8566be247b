#pragma once

#include <stdexcept>
#include <string>

namespace mrag {

// User-supplied data or configuration violates a documented contract.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Bad paths, unreadable files, malformed config.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A model backend failed: transport error after retries, empty or
// unusable completion, missing mock fixture where one is required.
class BackendError : public std::runtime_error {
public:
    explicit BackendError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mrag
