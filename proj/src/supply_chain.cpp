#include "actcheck/supply_chain.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace actcheck {

const Stakeholder* SupplyChainGraph::stakeholder(const std::string& id) const {
    for (const auto& s : stakeholders)
        if (s.id == id) return &s;
    return nullptr;
}

const TechnicalRequirement* SupplyChainGraph::requirement(const std::string& id) const {
    for (const auto& r : requirements)
        if (r.id == id) return &r;
    return nullptr;
}

const DesignContract* SupplyChainGraph::contract(const std::string& id) const {
    for (const auto& c : contracts)
        if (c.id == id) return &c;
    return nullptr;
}

const Guarantee* SupplyChainGraph::guarantee(const std::string& contract_id,
                                             const std::string& id) const {
    const DesignContract* c = contract(contract_id);
    if (!c) return nullptr;
    for (const auto& g : c->guarantees)
        if (g.id == id) return &g;
    return nullptr;
}

std::size_t SupplyChainGraph::dependency_edge_count() const {
    std::size_t n = 0;
    for (const auto& c : contracts)
        for (const auto& a : c.assumptions) n += a.discharge.size();
    return n;
}

namespace {

struct Resolver {
    const csl::SpecDocument& doc;
    const QualityModel& model;
    bool strict;
    std::vector<Finding>& findings;

    void add(Severity severity, const char* code, std::string message, SourceSpan span) {
        findings.push_back({severity, code, std::move(message), {std::move(span)}});
    }

    void error(const char* code, std::string message, SourceSpan span) {
        add(Severity::Error, code, std::move(message), std::move(span));
    }

    // Warning by default, Error in strict mode.
    void lenient(const char* code, std::string message, SourceSpan span) {
        add(strict ? Severity::Error : Severity::Warning, code, std::move(message),
            std::move(span));
    }

    SupplyChainGraph run() {
        SupplyChainGraph graph;
        graph.spec_name = doc.name;

        for (const auto& s : doc.stakeholders)
            graph.stakeholders.push_back({s.id, s.role, s.span});

        std::set<std::string> stakeholder_ids;
        for (const auto& s : doc.stakeholders) stakeholder_ids.insert(s.id);
        std::set<std::string> requirement_ids;
        for (const auto& r : doc.requirements) requirement_ids.insert(r.id);

        for (const auto& r : doc.requirements) {
            if (!stakeholder_ids.count(r.owner))
                error(codes::unresolved_ref,
                      "requirement '" + r.id + "' names unknown owner '" + r.owner + "'", r.span);
            graph.requirements.push_back({r.id, r.owner, r.status, r.text, r.span});
        }

        for (const auto& c : doc.contracts) {
            DesignContract contract;
            contract.id = c.id;
            contract.owner = c.owner;
            contract.span = c.span;
            if (!stakeholder_ids.count(c.owner))
                error(codes::unresolved_ref,
                      "contract '" + c.id + "' names unknown owner '" + c.owner + "'", c.span);

            if (auto attr = find_attribute(model, c.attribute)) {
                contract.attribute = *attr;
                contract.attribute_known = true;
            } else {
                contract.attribute = c.attribute;
                std::string hint;
                for (const auto& s : suggest_attributes(model, c.attribute))
                    hint += (hint.empty() ? "" : ", ") + s;
                lenient(codes::unknown_attribute,
                        "contract '" + c.id + "' names attribute '" + c.attribute +
                            "' not present in quality model '" + model.name +
                            "' (closest: " + hint + ")",
                        c.span);
            }

            for (const auto& a : c.assumptions) {
                Assumption assumption{a.id, a.text, a.accepted, {}, a.span};
                for (const auto& ref : a.discharged_by)
                    if (auto resolved = resolve_ref(c.id, a.id, ref))
                        assumption.discharge.push_back(std::move(*resolved));
                contract.assumptions.push_back(std::move(assumption));
            }
            for (const auto& g : c.guarantees)
                contract.guarantees.push_back({g.id, g.text, g.span});
            graph.contracts.push_back(std::move(contract));
        }

        for (const auto& f : doc.flows) {
            for (const auto* endpoint : {&f.from, &f.to})
                if (!stakeholder_ids.count(*endpoint))
                    error(codes::unresolved_ref,
                          "flow references unknown stakeholder '" + *endpoint + "'", f.span);
            FlowEdge edge{f.from, f.to, {}, f.span};
            for (const auto& carried : f.carries) {
                if (!requirement_ids.count(carried.id)) {
                    error(codes::unresolved_ref,
                          "flow carries unknown requirement '" + carried.id + "'", carried.span);
                    continue;
                }
                edge.carries.push_back(carried.id);
                const auto owner_of = [&]() -> std::string {
                    for (const auto& r : doc.requirements)
                        if (r.id == carried.id) return r.owner;
                    return {};
                }();
                if (owner_of != f.from)
                    lenient(codes::flow_ownership,
                            "flow " + f.from + " -> " + f.to + " carries '" + carried.id +
                                "' which is owned by '" + owner_of + "', not by '" + f.from + "'",
                            carried.span);
            }
            graph.flows.push_back(std::move(edge));
        }

        return graph;
    }

    std::optional<ResolvedRef> resolve_ref(const std::string& contract_id,
                                           const std::string& assumption_id,
                                           const csl::DischargeRef& ref) {
        ResolvedRef out;
        out.span = ref.span;
        if (ref.qualified()) {
            out.kind = ResolvedRef::Kind::Guarantee;
            out.contract = *ref.contract;
            out.guarantee = ref.id;
            const auto target = std::find_if(doc.contracts.begin(), doc.contracts.end(),
                                             [&](const auto& c) { return c.id == *ref.contract; });
            if (target == doc.contracts.end()) {
                error(codes::unresolved_ref,
                      "assumption '" + contract_id + "." + assumption_id +
                          "' references unknown contract '" + *ref.contract + "'",
                      ref.span);
                return std::nullopt;
            }
            const bool found = std::any_of(target->guarantees.begin(), target->guarantees.end(),
                                           [&](const auto& g) { return g.id == ref.id; });
            if (!found) {
                error(codes::unresolved_ref,
                      "assumption '" + contract_id + "." + assumption_id +
                          "' references unknown guarantee '" + ref.qualified_name() + "'",
                      ref.span);
                return std::nullopt;
            }
        } else {
            out.kind = ResolvedRef::Kind::Requirement;
            out.requirement = ref.id;
            const bool found = std::any_of(doc.requirements.begin(), doc.requirements.end(),
                                           [&](const auto& r) { return r.id == ref.id; });
            if (!found) {
                error(codes::unresolved_ref,
                      "assumption '" + contract_id + "." + assumption_id +
                          "' references unknown requirement '" + ref.id + "'",
                      ref.span);
                return std::nullopt;
            }
        }
        return out;
    }
};

} // namespace

ResolveResult resolve(const csl::SpecDocument& doc, const QualityModel& model,
                      const ResolveOptions& options) {
    ResolveResult result;
    Resolver resolver{doc, model, options.strict, result.findings};
    SupplyChainGraph graph = resolver.run();
    if (!has_errors(result.findings))
        result.graph = std::move(graph);
    return result;
}

std::vector<Finding> flow_check(const SupplyChainGraph& graph, bool strict) {
    std::vector<Finding> findings;
    for (const auto& contract : graph.contracts) {
        for (const auto& assumption : contract.assumptions) {
            for (const auto& ref : assumption.discharge) {
                if (ref.kind != ResolvedRef::Kind::Requirement) continue;
                const TechnicalRequirement* req = graph.requirement(ref.requirement);
                if (!req || req->owner == contract.owner) continue;

                const bool carried =
                    std::any_of(graph.flows.begin(), graph.flows.end(), [&](const FlowEdge& f) {
                        return f.from == req->owner && f.to == contract.owner &&
                               std::find(f.carries.begin(), f.carries.end(), req->id) !=
                                   f.carries.end();
                    });
                if (carried) continue;

                Finding f;
                f.severity = strict ? Severity::Error : Severity::Warning;
                f.code = codes::flow_ownership;
                f.message = "assumption '" + contract.id + "." + assumption.id +
                            "' relies on '" + req->id + "' owned by '" + req->owner +
                            "' but no flow " + req->owner + " -> " + contract.owner +
                            " carries it";
                f.spans = {ref.span};
                findings.push_back(std::move(f));
            }
        }
    }
    return findings;
}

} // namespace actcheck
