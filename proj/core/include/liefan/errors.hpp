#pragma once

#include <stdexcept>
#include <string>

namespace liefan {

/// Base class for all liefan errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid user input: bad descriptors, malformed rationals, precondition
/// violations such as a non-dominant highest weight.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Requested algebra series / rank / twist outside the shipped families.
class UnsupportedAlgebraError : public Error {
public:
    explicit UnsupportedAlgebraError(const std::string& what) : Error(what) {}
};

/// A computation window too shallow to close the recursion, or a recursion
/// that escapes its window. Soundness over convenience: never silently
/// return partial tables.
class WindowError : public Error {
public:
    explicit WindowError(const std::string& what) : Error(what) {}
};

} // namespace liefan
