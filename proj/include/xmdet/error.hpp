#pragma once

#include <stdexcept>
#include <string>

namespace xmdet {

// Invalid configuration or shape mismatch. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Input outside an operation's domain (e.g. non-positive depth).
// The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace xmdet
