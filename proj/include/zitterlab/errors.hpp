#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace zitterlab {

/// Error categories, aligned with the CLI exit codes:
/// config/usage errors exit 2, physics-constraint violations exit 3,
/// numerical failures exit 4.
enum class ErrorCategory { Config = 2, Physics = 3, Numerical = 4 };

/// Short numeric rendering for diagnostics (std::to_string flattens small
/// residuals to 0.000000).
inline std::string num_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

inline const char* category_name(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::Config: return "config";
        case ErrorCategory::Physics: return "physics";
        case ErrorCategory::Numerical: return "numerical";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string kind, std::string message)
        : std::runtime_error(kind + ": " + message),
          category_(category),
          kind_(std::move(kind)),
          message_(std::move(message)) {}

    ErrorCategory category() const { return category_; }
    const std::string& kind() const { return kind_; }
    const std::string& message() const { return message_; }
    int exit_code() const { return static_cast<int>(category_); }

private:
    ErrorCategory category_;
    std::string kind_;
    std::string message_;
};

struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& msg)
        : Error(ErrorCategory::Physics, "ConstraintViolation", msg) {}
};

struct SuperunitaryV2 : Error {
    explicit SuperunitaryV2(const std::string& msg)
        : Error(ErrorCategory::Physics, "SuperunitaryV2", msg) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& msg)
        : Error(ErrorCategory::Physics, "InvalidParams", msg) {}
};

struct InsufficientDerivatives : Error {
    explicit InsufficientDerivatives(const std::string& msg)
        : Error(ErrorCategory::Config, "InsufficientDerivatives", msg) {}
};

struct UnsupportedOrder : Error {
    explicit UnsupportedOrder(const std::string& msg)
        : Error(ErrorCategory::Config, "UnsupportedOrder", msg) {}
};

struct DegenerateLeadingCoefficient : Error {
    explicit DegenerateLeadingCoefficient(const std::string& msg)
        : Error(ErrorCategory::Config, "DegenerateLeadingCoefficient", msg) {}
};

struct ConfigParseError : Error {
    explicit ConfigParseError(const std::string& msg)
        : Error(ErrorCategory::Config, "ConfigParseError", msg) {}
};

struct RootFindingFailure : Error {
    explicit RootFindingFailure(const std::string& msg)
        : Error(ErrorCategory::Numerical, "RootFindingFailure", msg) {}
};

struct NonFiniteState : Error {
    explicit NonFiniteState(const std::string& msg)
        : Error(ErrorCategory::Numerical, "NonFiniteState", msg) {}
};

struct SingularSystem : Error {
    explicit SingularSystem(const std::string& msg)
        : Error(ErrorCategory::Numerical, "SingularSystem", msg) {}
};

}  // namespace zitterlab
