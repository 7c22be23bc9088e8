#include "actcheck/finding.hpp"
#include "actcheck/source_span.hpp"

#include <algorithm>

namespace actcheck {

std::string format_span(const SourceSpan& span) {
    return span.file + ":" + std::to_string(span.line) + ":" + std::to_string(span.column);
}

const char* severity_name(Severity severity) {
    switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
    }
    return "unknown";
}

bool has_errors(const std::vector<Finding>& findings) {
    return std::any_of(findings.begin(), findings.end(),
                       [](const Finding& f) { return f.severity == Severity::Error; });
}

} // namespace actcheck
