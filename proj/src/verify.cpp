#include "actcheck/verify.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace actcheck {

namespace {

std::optional<SourceSpan> span_of(const SupplyChainGraph& graph, const std::string& qualified) {
    const auto dot = qualified.find('.');
    if (dot == std::string::npos) {
        if (const auto* req = graph.requirement(qualified)) return req->span;
        return std::nullopt;
    }
    const auto* contract = graph.contract(qualified.substr(0, dot));
    if (!contract) return std::nullopt;
    const std::string id = qualified.substr(dot + 1);
    for (const auto& a : contract->assumptions)
        if (a.id == id) return a.span;
    for (const auto& g : contract->guarantees)
        if (g.id == id) return g.span;
    return std::nullopt;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace

VerificationRun verify_run(const std::vector<csl::SpecDocument>& docs, const QualityModel& model,
                           const MappingTable& mapping, const VerifyOptions& options) {
    VerificationRun run;
    VerificationReport& report = run.report;

    csl::MergeResult merged = csl::merge(docs);
    report.spec_name = docs.empty() ? "" : docs.front().name;
    report.findings = merged.findings;
    if (!merged.ok()) return run;

    ResolveResult resolved = resolve(merged.document, model, {options.strict});
    report.findings.insert(report.findings.end(), resolved.findings.begin(),
                           resolved.findings.end());
    if (!resolved.ok()) return run;

    SupplyChainGraph graph = std::move(*resolved.graph);
    const auto flow_findings = flow_check(graph, options.strict);
    report.findings.insert(report.findings.end(), flow_findings.begin(), flow_findings.end());

    report.resolved = true;
    report.state = resolve_state(graph);
    report.cycles = detect_cycles(graph);

    for (const auto& cycle : report.cycles) {
        Finding f;
        f.severity = Severity::Warning;
        f.code = codes::circular_discharge;
        f.message = "circular discharge: " + join(cycle, " -> ");
        for (const auto& id : cycle)
            if (auto span = span_of(graph, id)) f.spans.push_back(*span);
        report.findings.push_back(std::move(f));
    }

    for (const auto& contract : graph.contracts) {
        for (const auto& assumption : contract.assumptions) {
            if (assumption.accepted) continue;
            const std::string qualified = contract.id + "." + assumption.id;
            if (assumption.discharge.empty()) {
                Finding f;
                f.severity = Severity::Info;
                f.code = codes::empty_discharge;
                f.message = "assumption '" + assumption.id + "' of contract '" + contract.id +
                            "' has no discharge references and is not accepted";
                f.spans = {assumption.span};
                report.findings.push_back(std::move(f));
            }
            if (!report.state.assumptions.at(qualified)) {
                Finding f;
                f.severity = Severity::Warning;
                f.code = codes::open_assumption;
                f.message = "assumption '" + assumption.id + "' of contract '" + contract.id +
                            "' is not discharged";
                f.spans = {assumption.span};
                report.findings.push_back(std::move(f));
            }
        }
    }

    std::set<AttributeId> established;
    for (const auto& contract : graph.contracts) {
        if (!contract.attribute_known || contract.guarantees.empty()) continue;
        const bool all = std::all_of(
            contract.guarantees.begin(), contract.guarantees.end(), [&](const Guarantee& g) {
                return report.state.guarantees.at(contract.id + "." + g.id);
            });
        if (all) established.insert(contract.attribute);
    }
    report.established.assign(established.begin(), established.end());
    report.coverage = coverage(mapping, established);

    run.graph = std::move(graph);
    return run;
}

VerificationReport verify(const std::vector<csl::SpecDocument>& docs, const QualityModel& model,
                          const MappingTable& mapping, const VerifyOptions& options) {
    return verify_run(docs, model, mapping, options).report;
}

} // namespace actcheck
