#pragma once

#include "actcheck/verify.hpp"

#include <string>

namespace actcheck {

// Human-readable report: FINDINGS, STATE, ESTABLISHED ATTRIBUTES, COVERAGE,
// CYCLES. Deterministic ordering throughout.
std::string render_text(const VerificationReport& report);

// Report as JSON with keys spec, findings, state, established, coverage,
// cycles. Byte-deterministic for identical reports.
std::string render_json(const VerificationReport& report);

std::string render_findings_text(const std::vector<Finding>& findings);
std::string render_findings_json(const std::string& spec_name,
                                 const std::vector<Finding>& findings);
std::string render_coverage_text(const std::vector<CoverageRecord>& coverage);
std::string render_coverage_json(const std::vector<CoverageRecord>& coverage);
std::string render_trace_text(const std::vector<TraceChain>& chains);
std::string render_trace_json(const std::vector<TraceChain>& chains);

} // namespace actcheck
