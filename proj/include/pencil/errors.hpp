#pragma once

#include <stdexcept>
#include <string>

namespace pencil {

// Malformed input files (datasets, snapshots). Messages carry the line number.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid keys/values in experiment config files or CLI overrides.
// The CLI maps these to the usage exit code.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Semantically invalid data (e.g. a label index >= class count).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pencil
