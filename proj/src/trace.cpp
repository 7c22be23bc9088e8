#include "actcheck/verify.hpp"

#include <algorithm>
#include <set>

namespace actcheck {

namespace {

struct Tracer {
    const SupplyChainGraph& graph;
    const DischargeState& state;
    const QualityModel& model;
    const MappingTable& mapping;

    std::string assumption_status(const std::string& contract, const std::string& id) const {
        return state.assumptions.at(contract + "." + id) ? "fulfilled" : "unfulfilled";
    }
    std::string guarantee_status(const std::string& contract, const std::string& id) const {
        return state.guarantees.at(contract + "." + id) ? "established" : "not-established";
    }
    std::string requirement_status(const std::string& id) const {
        return state.requirements.at(id) ? "fulfilled" : "unfulfilled";
    }

    bool attribute_established(const AttributeId& attr) const {
        for (const auto& c : graph.contracts) {
            if (!c.attribute_known || c.attribute != attr || c.guarantees.empty()) continue;
            const bool all =
                std::all_of(c.guarantees.begin(), c.guarantees.end(), [&](const Guarantee& g) {
                    return state.guarantees.at(c.id + "." + g.id);
                });
            if (all) return true;
        }
        return false;
    }

    std::vector<const DesignContract*> contracts_for(const AttributeId& attr) const {
        std::vector<const DesignContract*> out;
        for (const auto& c : graph.contracts)
            if (c.attribute_known && c.attribute == attr) out.push_back(&c);
        std::sort(out.begin(), out.end(),
                  [](const auto* a, const auto* b) { return a->id < b->id; });
        return out;
    }

    // contract -> guarantee -> assumption -> target -> owner, appended to a
    // fixed prefix; one chain per path.
    void downward(const std::vector<TraceElement>& prefix, const AttributeId& attr,
                  std::vector<TraceChain>& chains) const {
        for (const auto* contract : contracts_for(attr)) {
            std::vector<const Guarantee*> guarantees;
            for (const auto& g : contract->guarantees) guarantees.push_back(&g);
            std::sort(guarantees.begin(), guarantees.end(),
                      [](const auto* a, const auto* b) { return a->id < b->id; });

            std::vector<const Assumption*> assumptions;
            for (const auto& a : contract->assumptions) assumptions.push_back(&a);
            std::sort(assumptions.begin(), assumptions.end(),
                      [](const auto* a, const auto* b) { return a->id < b->id; });

            for (const auto* g : guarantees) {
                std::vector<TraceElement> head = prefix;
                head.push_back({"contract", contract->id, ""});
                head.push_back({"guarantee", g->id, guarantee_status(contract->id, g->id)});

                if (assumptions.empty()) {
                    chains.push_back({head});
                    continue;
                }
                for (const auto* a : assumptions) {
                    std::vector<TraceElement> with_assumption = head;
                    with_assumption.push_back(
                        {"assumption", a->id, assumption_status(contract->id, a->id)});

                    std::vector<ResolvedRef> refs = a->discharge;
                    std::sort(refs.begin(), refs.end(), [](const auto& x, const auto& y) {
                        return x.qualified_name() < y.qualified_name();
                    });
                    if (refs.empty()) {
                        chains.push_back({with_assumption});
                        continue;
                    }
                    for (const auto& ref : refs) {
                        std::vector<TraceElement> chain = with_assumption;
                        if (ref.kind == ResolvedRef::Kind::Requirement) {
                            chain.push_back({"requirement", ref.requirement,
                                             requirement_status(ref.requirement)});
                            if (const auto* req = graph.requirement(ref.requirement))
                                chain.push_back({"stakeholder", req->owner, ""});
                        } else {
                            chain.push_back({"guarantee", ref.qualified_name(),
                                             guarantee_status(ref.contract, ref.guarantee)});
                            if (const auto* target = graph.contract(ref.contract))
                                chain.push_back({"stakeholder", target->owner, ""});
                        }
                        chains.push_back({std::move(chain)});
                    }
                }
            }
        }
    }

    std::vector<TraceChain> for_article(Article article) const {
        std::vector<TraceChain> chains;
        const auto it = mapping.entries.find(article);
        if (it == mapping.entries.end()) return chains;
        for (const auto& attr : it->second) {
            std::vector<TraceElement> prefix{
                {"article", article_id(article), ""},
                {"attribute", attr, attribute_established(attr) ? "established" : "not-established"},
            };
            downward(prefix, attr, chains);
        }
        return chains;
    }

    std::vector<TraceChain> for_attribute(const AttributeId& attr) const {
        std::vector<TraceChain> chains;
        std::vector<TraceElement> prefix{
            {"attribute", attr, attribute_established(attr) ? "established" : "not-established"},
        };
        downward(prefix, attr, chains);
        return chains;
    }

    // requirement -> assumption -> contract -> attribute -> article(s).
    std::vector<TraceChain> for_requirement(const std::string& id) const {
        std::vector<TraceChain> chains;
        for (const auto& contract : graph.contracts) {
            for (const auto& assumption : contract.assumptions) {
                const bool references = std::any_of(
                    assumption.discharge.begin(), assumption.discharge.end(),
                    [&](const ResolvedRef& r) {
                        return r.kind == ResolvedRef::Kind::Requirement && r.requirement == id;
                    });
                if (!references) continue;

                std::vector<TraceElement> base{
                    {"requirement", id, requirement_status(id)},
                    {"assumption", assumption.id,
                     assumption_status(contract.id, assumption.id)},
                    {"contract", contract.id, ""},
                    {"attribute", contract.attribute,
                     contract.attribute_known
                         ? (attribute_established(contract.attribute) ? "established"
                                                                      : "not-established")
                         : ""},
                };

                std::set<Article> articles;
                if (contract.attribute_known)
                    articles = articles_for_attribute(mapping, contract.attribute);
                if (articles.empty()) {
                    chains.push_back({base});
                    continue;
                }
                for (Article article : articles) {
                    std::vector<TraceElement> chain = base;
                    chain.push_back({"article", article_id(article), ""});
                    chains.push_back({std::move(chain)});
                }
            }
        }
        return chains;
    }
};

std::vector<std::string> chain_ids(const TraceChain& chain) {
    std::vector<std::string> ids;
    for (const auto& e : chain.elements) ids.push_back(e.id);
    return ids;
}

} // namespace

TraceResult trace(const SupplyChainGraph& graph, const DischargeState& state,
                  const QualityModel& model, const MappingTable& mapping,
                  const std::string& query) {
    Tracer tracer{graph, state, model, mapping};
    TraceResult result;

    if (const auto article = article_from_string(query)) {
        result.chains = tracer.for_article(*article);
    } else if (const auto attr = find_attribute(model, query)) {
        result.chains = tracer.for_attribute(*attr);
    } else if (graph.requirement(query)) {
        result.chains = tracer.for_requirement(query);
    } else {
        result.error = "unknown trace query id '" + query + "'";
        return result;
    }

    std::sort(result.chains.begin(), result.chains.end(),
              [](const TraceChain& a, const TraceChain& b) { return chain_ids(a) < chain_ids(b); });
    return result;
}

} // namespace actcheck
