#include "actcheck/quality_model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace actcheck {

namespace {

using Source = DefinitionSource;

SubCharacteristic sub(const char* id, const char* display, const char* definition,
                      Source source) {
    return SubCharacteristic{id, display, definition, source};
}

// Shorthand for sub-characteristics whose definition lives in a standard.
SubCharacteristic iso10(const char* id, const char* display) {
    return sub(id, display, "see ISO/IEC 25010:2023", Source::Iso25010);
}
SubCharacteristic iso12(const char* id, const char* display) {
    return sub(id, display, "see ISO/IEC 25012", Source::Iso25012);
}
SubCharacteristic iso59(const char* id, const char* display) {
    return sub(id, display, "see ISO/IEC 25059", Source::Iso25059);
}

} // namespace

QualityModel builtin_extended_model() {
    QualityModel model;
    model.name = "extended-ai-product-quality";

    model.characteristics = {
        {"FunctionalSuitability",
         "Functional Suitability",
         {
             iso10("FunctionalCompleteness", "Functional Completeness"),
             iso10("FunctionalCorrectness", "Functional Correctness"),
             iso10("FunctionalAppropriateness", "Functional Appropriateness"),
             iso59("FunctionalAdaptability", "Functional Adaptability"),
         }},
        {"PerformanceEfficiency",
         "Performance Efficiency",
         {
             iso10("TimeBehaviour", "Time Behaviour"),
             iso10("ResourceUtilization", "Resource Utilization"),
             iso10("Capacity", "Capacity"),
         }},
        {"Compatibility",
         "Compatibility",
         {
             iso10("CoExistence", "Co-existence"),
             iso10("Interoperability", "Interoperability"),
         }},
        {"InteractionCapability",
         "Interaction Capability",
         {
             iso10("AppropriatenessRecognizability", "Appropriateness Recognizability"),
             iso10("Learnability", "Learnability"),
             iso10("Operability", "Operability"),
             iso10("UserErrorProtection", "User Error Protection"),
             iso10("UserEngagement", "User Engagement"),
             iso10("Inclusivity", "Inclusivity"),
             iso10("UserAssistance", "User Assistance"),
             iso10("SelfDescriptiveness", "Self-descriptiveness"),
         }},
        {"Reliability",
         "Reliability",
         {
             iso10("Faultlessness", "Faultlessness"),
             iso10("FaultTolerance", "Fault Tolerance"),
             iso10("Recoverability", "Recoverability"),
             iso59("Robustness", "Robustness"),
         }},
        {"Security",
         "Security",
         {
             iso10("Confidentiality", "Confidentiality"),
             sub("Integrity", "Integrity",
                 "The data are unaltered either by natural phenomenon (e.g. noise) or "
                 "intentional action (e.g. poisoning).",
                 Source::ExtendedModel),
             iso10("NonRepudiation", "Non-repudiation"),
             sub("Accountability", "Accountability",
                 "Capability of a product to enable actions of a human to be traced uniquely "
                 "to the human.",
                 Source::ExtendedModel),
             iso10("Authenticity", "Authenticity"),
             iso10("Resistance", "Resistance"),
         }},
        {"Maintainability",
         "Maintainability",
         {
             iso10("Modularity", "Modularity"),
             iso10("Reusability", "Reusability"),
             iso10("Analysability", "Analysability"),
             iso10("Modifiability", "Modifiability"),
             iso10("Testability", "Testability"),
         }},
        {"Flexibility",
         "Flexibility",
         {
             iso10("Adaptability", "Adaptability"),
             iso10("Installability", "Installability"),
             iso10("Replaceability", "Replaceability"),
             iso10("Scalability", "Scalability"),
         }},
        {"Safety",
         "Safety",
         {
             iso10("OperationalConstraint", "Operational Constraint"),
             iso10("RiskIdentification", "Risk Identification"),
             iso10("FailSafe", "Fail Safe"),
             iso10("HazardWarning", "Hazard Warning"),
             iso10("SafeIntegration", "Safe Integration"),
             sub("ValueAlignment", "Value Alignment",
                 "The extent to which the AI system behaviour is aligned with human values.",
                 Source::ExtendedModel),
             sub("SelfMonitoring", "Self-Monitoring",
                 "The extent to which the system is aware of its state so it can respond "
                 "appropriately to avoid going to a harmful state.",
                 Source::ExtendedModel),
             sub("Monitorability", "Monitorability",
                 "The extent to which relevant indicators of an AI system are effectively "
                 "observed/monitored and integrated in the operation of the system.",
                 Source::ExtendedModel),
             sub("Intervenability", "Intervenability", "see ISO/IEC TR 24028", Source::Other),
         }},
        {"Transparency",
         "Transparency",
         {
             sub("UserTransparency", "User Transparency",
                 "Degree to which the functionalities of the system are clear to the intended "
                 "user.",
                 Source::ExtendedModel),
             sub("Interpretability", "Interpretability",
                 "The extent to which the inner workings of the AI system can be analyzed in "
                 "order to understand why it behaves the way it does.",
                 Source::ExtendedModel),
             sub("Explainability", "Explainability", "see ISO 22989", Source::ExtendedModel),
             sub("Traceability", "Traceability",
                 "The extent to which there exists data and processes that can record the "
                 "system’s decisions and link artifacts at different stages.",
                 Source::ExtendedModel),
             sub("Documentability", "Documentability", "see ISO/IEC/IEEE 24765",
                 Source::ExtendedModel),
         }},
        {"Trustworthiness",
         "Trustworthiness",
         {
             sub("EthicalIntegrity", "Ethical Integrity",
                 "The extent to which an entity's actions, beliefs, methods, measures, and "
                 "principles all derive from a single core group of values.",
                 Source::ExtendedModel),
             sub("HumanOversight", "Human Oversight",
                 "The ability for humans to understand, supervise, and control the design and "
                 "operation of AI-based systems.",
                 Source::ExtendedModel),
             sub("Fairness", "Fairness",
                 "The extent to which a system prevents unjust predictions towards protected "
                 "attributes (race, gender, income, etc). Ability of the model to output fair "
                 "decisions.",
                 Source::ExtendedModel),
             sub("PrivacyProtection", "Privacy protection",
                 "The extent to which the product or system protects the privacy and handles "
                 "sensitive information of the stakeholders involved (users, people in "
                 "training examples).",
                 Source::ExtendedModel),
         }},
        {"DataQuality",
         "Data Quality",
         {
             iso12("Accuracy", "Accuracy"),
             iso12("DataCompleteness", "Data Completeness"),
             iso12("Consistency", "Consistency"),
             iso12("Credibility", "Credibility"),
             iso12("Currentness", "Currentness"),
             iso12("Precision", "Precision"),
             iso12("Compliance", "Compliance"),
             iso12("DataTraceability", "Data Traceability"),
             sub("Availability", "Availability",
                 "The degree to which data has attributes that enable it to be retrieved by "
                 "authorized users and/or applications in a specific context of use and "
                 "within the time required.",
                 Source::ExtendedModel),
             sub("Representativeness", "Representativeness",
                 "The distribution of data (or probability of distribution) truly corresponds "
                 "to the information in the environment or the phenomenon to be captured.",
                 Source::ExtendedModel),
             sub("Independence", "Independence",
                 "The data at a specific level of architectural abstraction are not affected "
                 "by changes to lower levels of abstraction. separate sets of data are used "
                 "for specific purposes where required (e.g. AI training data, AI validation "
                 "data).",
                 Source::ExtendedModel),
             sub("DataFairness", "Data Fairness",
                 "Degree to which the data is free from bias against a given group.",
                 Source::ExtendedModel),
             sub("Temporality", "Temporality",
                 "A general property referring to temporal characteristics of data e.g. its "
                 "timeliness, ageing or lifetime.",
                 Source::ExtendedModel),
         }},
    };

    // Known misspellings in source material.
    model.aliases = {
        {"Appropiateness Recognizability", "AppropriatenessRecognizability"},
        {"Non-repudition", "NonRepudiation"},
        {"Representative-ness", "Representativeness"},
    };

    return model;
}

bool is_valid_attribute_id(const std::string& name) {
    if (name.empty() || !std::isupper(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(),
                       [](unsigned char c) { return std::isalnum(c); });
}

std::string normalize_attribute_name(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (unsigned char c : name) {
        if (c == '-' || std::isspace(c)) continue;
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

std::vector<AttributeId> all_attribute_ids(const QualityModel& model) {
    std::vector<AttributeId> ids;
    for (const auto& ch : model.characteristics) ids.push_back(ch.id);
    for (const auto& ch : model.characteristics)
        for (const auto& s : ch.children) ids.push_back(s.id);
    return ids;
}

std::optional<AttributeId> find_attribute(const QualityModel& model, const std::string& name) {
    const auto ids = all_attribute_ids(model);

    // Exact canonical names win.
    if (std::find(ids.begin(), ids.end(), name) != ids.end()) return name;

    const std::string probe = normalize_attribute_name(name);
    if (probe.empty()) return std::nullopt;

    for (const auto& id : ids)
        if (normalize_attribute_name(id) == probe) return id;

    for (const auto& [alias, target] : model.aliases)
        if (normalize_attribute_name(alias) == probe) return target;

    return std::nullopt;
}

namespace {

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t prev = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t cur = row[j];
            const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, prev + cost});
            prev = cur;
        }
    }
    return row[b.size()];
}

} // namespace

std::vector<AttributeId> suggest_attributes(const QualityModel& model, const std::string& name,
                                            std::size_t count) {
    const std::string probe = normalize_attribute_name(name);
    std::vector<std::pair<std::size_t, AttributeId>> ranked;
    for (const auto& id : all_attribute_ids(model))
        ranked.emplace_back(edit_distance(probe, normalize_attribute_name(id)), id);
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first : x.second < y.second;
    });
    std::vector<AttributeId> out;
    for (const auto& [dist, id] : ranked) {
        if (out.size() == count) break;
        out.push_back(id);
    }
    return out;
}

std::vector<ModelDefect> validate_model(const QualityModel& model) {
    std::vector<ModelDefect> defects;

    std::set<AttributeId> seen;
    auto check_unique = [&](const AttributeId& id, const std::string& what) {
        if (!seen.insert(id).second)
            defects.push_back({"duplicate-id", "duplicate id '" + id + "' (" + what + ")"});
    };
    for (const auto& ch : model.characteristics) check_unique(ch.id, "characteristic");

    // A sub-characteristic has exactly one parent; a second occurrence under
    // a different characteristic is a duplicate-parent defect.
    std::map<AttributeId, AttributeId> parent_seen;
    for (const auto& ch : model.characteristics) {
        for (const auto& s : ch.children) {
            auto [it, inserted] = parent_seen.emplace(s.id, ch.id);
            if (!inserted) {
                if (it->second != ch.id)
                    defects.push_back({"duplicate-parent",
                                       "sub-characteristic '" + s.id + "' has duplicate parent: '" +
                                           it->second + "' and '" + ch.id + "'"});
                else
                    defects.push_back(
                        {"duplicate-id", "duplicate id '" + s.id + "' (sub-characteristic)"});
                continue;
            }
            check_unique(s.id, "sub-characteristic");
            if (s.source == DefinitionSource::ExtendedModel && s.definition.empty())
                defects.push_back(
                    {"empty-definition", "sub-characteristic '" + s.id +
                                             "' has an extended-model source but no definition"});
        }
    }

    for (const auto& [alias, target] : model.aliases) {
        if (!seen.count(target))
            defects.push_back({"dangling-alias", "dangling alias '" + alias +
                                                     "' points at missing id '" + target + "'"});
    }

    return defects;
}

std::optional<AttributeId> parent_of(const QualityModel& model, const AttributeId& sub) {
    for (const auto& ch : model.characteristics)
        for (const auto& s : ch.children)
            if (s.id == sub) return ch.id;
    return std::nullopt;
}

} // namespace actcheck
