#pragma once

#include "actcheck/csl/ast.hpp"
#include "actcheck/finding.hpp"
#include "actcheck/quality_model.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace actcheck {

struct Stakeholder {
    std::string id;
    std::string role;
    SourceSpan span;
};

struct TechnicalRequirement {
    std::string id;
    std::string owner;
    csl::RequirementStatus status = csl::RequirementStatus::Open;
    std::string text;
    SourceSpan span;
};

// A discharge reference with its target resolved.
struct ResolvedRef {
    enum class Kind { Requirement, Guarantee };

    Kind kind = Kind::Requirement;
    std::string requirement;     // Kind::Requirement
    std::string contract;        // Kind::Guarantee
    std::string guarantee;       // Kind::Guarantee
    SourceSpan span;

    std::string qualified_name() const {
        return kind == Kind::Requirement ? requirement : contract + "." + guarantee;
    }
};

struct Assumption {
    std::string id;
    std::string text;
    bool accepted = false;
    std::vector<ResolvedRef> discharge;
    SourceSpan span;
};

struct Guarantee {
    std::string id;
    std::string text;
    SourceSpan span;
};

struct DesignContract {
    std::string id;
    std::string owner;
    AttributeId attribute;       // canonical when attribute_known, else as written
    bool attribute_known = false;
    std::vector<Assumption> assumptions;
    std::vector<Guarantee> guarantees;
    SourceSpan span;
};

struct FlowEdge {
    std::string from;
    std::string to;
    std::vector<std::string> carries;
    SourceSpan span;
};

// Fully resolved supply-chain model: every identifier reference checked,
// attribute names canonicalized. Immutable after resolve().
struct SupplyChainGraph {
    std::string spec_name;
    std::vector<Stakeholder> stakeholders;
    std::vector<TechnicalRequirement> requirements;
    std::vector<DesignContract> contracts;
    std::vector<FlowEdge> flows;

    const Stakeholder* stakeholder(const std::string& id) const;
    const TechnicalRequirement* requirement(const std::string& id) const;
    const DesignContract* contract(const std::string& id) const;
    const Guarantee* guarantee(const std::string& contract_id, const std::string& id) const;

    // Total number of discharge references in the document.
    std::size_t dependency_edge_count() const;
};

struct ResolveOptions {
    bool strict = false;
};

// A graph is produced iff resolution raised no Error findings; the two
// outcomes are mutually exclusive.
struct ResolveResult {
    std::optional<SupplyChainGraph> graph;
    std::vector<Finding> findings;

    bool ok() const { return graph.has_value(); }
};

ResolveResult resolve(const csl::SpecDocument& doc, const QualityModel& model,
                      const ResolveOptions& options = {});

// For each assumption that discharges through a requirement owned by a
// different stakeholder, checks that some flow edge carries the requirement
// from its owner to the contract's owner. Same-owner references need no flow.
std::vector<Finding> flow_check(const SupplyChainGraph& graph, bool strict = false);

} // namespace actcheck
