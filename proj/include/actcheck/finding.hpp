#pragma once

#include "actcheck/source_span.hpp"

#include <string>
#include <vector>

namespace actcheck {

enum class Severity { Error, Warning, Info };

const char* severity_name(Severity severity);

// Diagnostic codes emitted by resolution and verification.
namespace codes {
inline constexpr const char* unresolved_ref = "unresolved-ref";
inline constexpr const char* duplicate_id = "duplicate-id";
inline constexpr const char* flow_ownership = "flow-ownership";
inline constexpr const char* circular_discharge = "circular-discharge";
inline constexpr const char* open_assumption = "open-assumption";
inline constexpr const char* unknown_attribute = "unknown-attribute";
inline constexpr const char* empty_discharge = "empty-discharge";
} // namespace codes

struct Finding {
    Severity severity = Severity::Warning;
    std::string code;
    std::string message;
    std::vector<SourceSpan> spans;
};

bool has_errors(const std::vector<Finding>& findings);

} // namespace actcheck
