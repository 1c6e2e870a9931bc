/**
 * @file errors.hpp
 * @brief Error taxonomy shared by evaluators, oracle and CLI.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace hypsum {

enum class ErrorKind {
    DivisionByZero,   // negative-index Pochhammer hit zero
    UndefinedSeries,  // lower-parameter Pochhammer vanishes within termination range
    ParameterPole,    // closed-form prefactor denominator vanishes / gamma pole
    ExcludedDomain,   // parameter point outside an identity's stated domain
    RestrictedEntry,  // catalog entry not evaluable as printed
    UnknownEntry,     // no catalog entry with the requested id
    Usage,            // bad CLI input
};

class EvalError : public std::runtime_error {
public:
    EvalError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DIVISION_BY_ZERO";
        case ErrorKind::UndefinedSeries: return "UNDEFINED_SERIES";
        case ErrorKind::ParameterPole: return "PARAMETER_POLE";
        case ErrorKind::ExcludedDomain: return "EXCLUDED_DOMAIN";
        case ErrorKind::RestrictedEntry: return "RESTRICTED_ENTRY";
        case ErrorKind::UnknownEntry: return "UNKNOWN_ENTRY";
        case ErrorKind::Usage: return "USAGE";
    }
    return "UNKNOWN";
}

} // namespace hypsum
