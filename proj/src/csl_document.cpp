#include "actcheck/csl/ast.hpp"

#include <algorithm>
#include <map>

namespace actcheck::csl {

namespace {

bool refs_equal(const std::vector<DischargeRef>& a, const std::vector<DischargeRef>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](const DischargeRef& x, const DischargeRef& y) {
                          return x.contract == y.contract && x.id == y.id;
                      });
}

bool names_equal(const std::vector<NameRef>& a, const std::vector<NameRef>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](const NameRef& x, const NameRef& y) { return x.id == y.id; });
}

} // namespace

bool ast_equal(const SpecDocument& a, const SpecDocument& b) {
    if (a.name != b.name || a.version != b.version) return false;

    if (!std::equal(a.stakeholders.begin(), a.stakeholders.end(), b.stakeholders.begin(),
                    b.stakeholders.end(), [](const StakeholderDecl& x, const StakeholderDecl& y) {
                        return x.id == y.id && x.role == y.role;
                    }))
        return false;

    if (!std::equal(a.requirements.begin(), a.requirements.end(), b.requirements.begin(),
                    b.requirements.end(), [](const RequirementDecl& x, const RequirementDecl& y) {
                        return x.id == y.id && x.owner == y.owner && x.status == y.status &&
                               x.text == y.text;
                    }))
        return false;

    if (!std::equal(a.contracts.begin(), a.contracts.end(), b.contracts.begin(),
                    b.contracts.end(), [](const ContractDecl& x, const ContractDecl& y) {
                        if (x.id != y.id || x.owner != y.owner || x.attribute != y.attribute)
                            return false;
                        if (!std::equal(x.assumptions.begin(), x.assumptions.end(),
                                        y.assumptions.begin(), y.assumptions.end(),
                                        [](const AssumeClause& p, const AssumeClause& q) {
                                            return p.id == q.id && p.text == q.text &&
                                                   p.accepted == q.accepted &&
                                                   refs_equal(p.discharged_by, q.discharged_by);
                                        }))
                            return false;
                        return std::equal(x.guarantees.begin(), x.guarantees.end(),
                                          y.guarantees.begin(), y.guarantees.end(),
                                          [](const GuaranteeClause& p, const GuaranteeClause& q) {
                                              return p.id == q.id && p.text == q.text;
                                          });
                    }))
        return false;

    if (!std::equal(a.flows.begin(), a.flows.end(), b.flows.begin(), b.flows.end(),
                    [](const FlowDecl& x, const FlowDecl& y) {
                        return x.from == y.from && x.to == y.to &&
                               names_equal(x.carries, y.carries);
                    }))
        return false;

    if (!std::equal(a.attributes.begin(), a.attributes.end(), b.attributes.begin(),
                    b.attributes.end(), [](const AttributeDecl& x, const AttributeDecl& y) {
                        return x.id == y.id &&
                               std::equal(x.subs.begin(), x.subs.end(), y.subs.begin(),
                                          y.subs.end(), [](const SubDecl& p, const SubDecl& q) {
                                              return p.id == q.id &&
                                                     p.definition == q.definition &&
                                                     p.aliases == q.aliases;
                                          });
                    }))
        return false;

    return std::equal(a.articles.begin(), a.articles.end(), b.articles.begin(),
                      b.articles.end(), [](const ArticleDecl& x, const ArticleDecl& y) {
                          return x.article == y.article && x.title == y.title &&
                                 names_equal(x.maps, y.maps);
                      });
}

MergeResult merge(const std::vector<SpecDocument>& docs) {
    MergeResult result;
    if (docs.empty()) return result;

    result.document.name = docs.front().name;
    result.document.version = docs.front().version;
    result.document.span = docs.front().span;

    std::map<std::string, SourceSpan> stakeholder_ids;
    std::map<std::string, SourceSpan> requirement_ids;
    std::map<std::string, SourceSpan> contract_ids;

    auto check = [&](std::map<std::string, SourceSpan>& ids, const std::string& kind,
                     const std::string& id, const SourceSpan& span) {
        auto [it, inserted] = ids.emplace(id, span);
        if (inserted) return true;
        Finding f;
        f.severity = Severity::Error;
        f.code = codes::duplicate_id;
        f.message = kind + " '" + id + "' declared more than once across merged documents";
        f.spans = {it->second, span};
        result.findings.push_back(std::move(f));
        return false;
    };

    for (const auto& doc : docs) {
        for (const auto& s : doc.stakeholders)
            if (check(stakeholder_ids, "stakeholder", s.id, s.span))
                result.document.stakeholders.push_back(s);
        for (const auto& r : doc.requirements)
            if (check(requirement_ids, "requirement", r.id, r.span))
                result.document.requirements.push_back(r);
        for (const auto& c : doc.contracts)
            if (check(contract_ids, "contract", c.id, c.span))
                result.document.contracts.push_back(c);
        for (const auto& f : doc.flows) result.document.flows.push_back(f);
        for (const auto& a : doc.attributes) result.document.attributes.push_back(a);
        for (const auto& a : doc.articles) result.document.articles.push_back(a);
    }

    if (!result.ok()) result.document = SpecDocument{};
    return result;
}

} // namespace actcheck::csl
