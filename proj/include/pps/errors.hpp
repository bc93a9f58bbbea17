#pragma once

#include <stdexcept>
#include <string>

namespace pps {

/// A problem evaluation produced a non-finite objective or constraint value.
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter or configuration value is outside its documented range.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller broke a documented precondition (wrong lengths, bad indices, ...).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// The requested operation is not available for the given object.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

/// A quality indicator has no defined value for the given inputs.
class UndefinedMetricError : public std::runtime_error {
public:
    explicit UndefinedMetricError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pps
