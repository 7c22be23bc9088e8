#pragma once

#include "actcheck/finding.hpp"
#include "actcheck/source_span.hpp"

#include <optional>
#include <string>
#include <vector>

namespace actcheck::csl {

enum class RequirementStatus { Attested, Open, NotApplicable };

const char* status_keyword(RequirementStatus status); // "attested" | "open" | "not-applicable"

// An identifier occurrence that keeps its own span (list members, refs).
struct NameRef {
    std::string id;
    SourceSpan span;
};

struct StakeholderDecl {
    std::string id;
    std::string role;
    SourceSpan span;
};

struct RequirementDecl {
    std::string id;
    std::string owner;
    RequirementStatus status = RequirementStatus::Open;
    std::string text;
    SourceSpan span;
};

// Discharge target: a technical requirement id, or Contract.Guarantee.
struct DischargeRef {
    std::optional<std::string> contract; // set for qualified refs
    std::string id;
    SourceSpan span;

    bool qualified() const { return contract.has_value(); }
    std::string qualified_name() const { return contract ? *contract + "." + id : id; }
};

struct AssumeClause {
    std::string id;
    std::string text;
    bool accepted = false; // stipulated true without discharge
    std::vector<DischargeRef> discharged_by;
    SourceSpan span;
};

struct GuaranteeClause {
    std::string id;
    std::string text;
    SourceSpan span;
};

struct ContractDecl {
    std::string id;
    std::string owner;
    std::string attribute; // quality attribute name as written; resolved later
    std::vector<AssumeClause> assumptions;
    std::vector<GuaranteeClause> guarantees;
    SourceSpan span;
};

struct FlowDecl {
    std::string from;
    std::string to;
    std::vector<NameRef> carries;
    SourceSpan span;
};

// Replacement-model production: `attribute <Char> { sub <Id> ... }`.
struct SubDecl {
    std::string id;
    std::string definition;           // optional `def "..."`
    std::vector<std::string> aliases; // optional `alias "...", "..."`
    SourceSpan span;
};

struct AttributeDecl {
    std::string id;
    std::vector<SubDecl> subs;
    SourceSpan span;
};

// Replacement-mapping production: `article A14 "Human Oversight" maps [...]`.
struct ArticleDecl {
    std::string article;
    std::string title;
    std::vector<NameRef> maps;
    SourceSpan span;
};

struct SpecDocument {
    std::string name;
    int version = 1;
    std::vector<StakeholderDecl> stakeholders;
    std::vector<RequirementDecl> requirements;
    std::vector<ContractDecl> contracts;
    std::vector<FlowDecl> flows;
    std::vector<AttributeDecl> attributes;
    std::vector<ArticleDecl> articles;
    SourceSpan span;
};

struct ParseError {
    SourceSpan span;
    std::string message;
    std::vector<std::string> expected; // token descriptions, may be empty
};

// Structural equality ignoring spans.
bool ast_equal(const SpecDocument& a, const SpecDocument& b);

// Union of declarations from several documents; name/version come from the
// first. Cross-file duplicate identifiers produce `duplicate-id` Errors.
struct MergeResult {
    SpecDocument document; // meaningful only when ok()
    std::vector<Finding> findings;

    bool ok() const { return !has_errors(findings); }
};

MergeResult merge(const std::vector<SpecDocument>& docs);

} // namespace actcheck::csl
