#pragma once

#include "actcheck/act_mapping.hpp"
#include "actcheck/csl/ast.hpp"
#include "actcheck/discharge.hpp"
#include "actcheck/finding.hpp"
#include "actcheck/quality_model.hpp"
#include "actcheck/supply_chain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace actcheck {

struct VerificationReport {
    std::string spec_name;
    std::vector<Finding> findings;
    DischargeState state;
    std::vector<AttributeId> established; // sorted
    std::vector<CoverageRecord> coverage;
    std::vector<std::vector<std::string>> cycles;
    bool resolved = false; // false when Error findings aborted verification
};

struct VerifyOptions {
    bool strict = false;
};

// Report plus the resolved graph, kept for trace queries and rendering.
struct VerificationRun {
    VerificationReport report;
    std::optional<SupplyChainGraph> graph;
};

// merge -> resolve -> flow_check -> resolve_state -> detect_cycles ->
// established attributes -> coverage. Error findings abort after resolution;
// the report then carries findings only. Pure function of its inputs.
VerificationRun verify_run(const std::vector<csl::SpecDocument>& docs, const QualityModel& model,
                           const MappingTable& mapping, const VerifyOptions& options = {});

VerificationReport verify(const std::vector<csl::SpecDocument>& docs, const QualityModel& model,
                          const MappingTable& mapping, const VerifyOptions& options = {});

// One step of a traceability chain. `status` is "fulfilled"/"unfulfilled"
// for requirements and assumptions, "established"/"not-established" for
// guarantees and attributes, empty for the rest.
struct TraceElement {
    std::string kind; // article|attribute|contract|guarantee|assumption|requirement|stakeholder
    std::string id;
    std::string status;
};

struct TraceChain {
    std::vector<TraceElement> elements;
};

struct TraceResult {
    std::vector<TraceChain> chains;
    std::optional<std::string> error; // set when the query id is unknown

    bool ok() const { return !error.has_value(); }
};

// Chains for an article id (downward to stakeholders), an attribute id, or
// a requirement id (upward to articles). Chains are ordered lexicographically
// by their element ids.
TraceResult trace(const SupplyChainGraph& graph, const DischargeState& state,
                  const QualityModel& model, const MappingTable& mapping,
                  const std::string& query);

} // namespace actcheck
