#include "actcheck/act_mapping.hpp"

#include <algorithm>

namespace actcheck {

const char* article_id(Article article) {
    switch (article) {
    case Article::A9: return "A9";
    case Article::A10: return "A10";
    case Article::A11: return "A11";
    case Article::A12: return "A12";
    case Article::A13: return "A13";
    case Article::A14: return "A14";
    case Article::A15: return "A15";
    }
    return "?";
}

const char* article_title(Article article) {
    switch (article) {
    case Article::A9: return "Risk Management System";
    case Article::A10: return "Data and data governance";
    case Article::A11: return "Technical Documentation";
    case Article::A12: return "Record-keeping";
    case Article::A13: return "Transparency and provision of information to users";
    case Article::A14: return "Human Oversight";
    case Article::A15: return "Accuracy, robustness, and cybersecurity";
    }
    return "?";
}

std::optional<Article> article_from_string(const std::string& id) {
    for (Article a : all_articles)
        if (id == article_id(a)) return a;
    return std::nullopt;
}

MappingTable builtin_mapping() {
    MappingTable table;
    table.entries = {
        {Article::A9, {"RiskIdentification", "Testability", "ValueAlignment"}},
        {Article::A10,
         {"Independence", "DataCompleteness", "Currentness", "DataFairness", "Precision",
          "Representativeness", "Consistency", "Accuracy", "Credibility", "Temporality",
          "Confidentiality", "Compliance", "DataTraceability"}},
        {Article::A11, {"Traceability"}},
        {Article::A12,
         {"Operability", "NonRepudiation", "Traceability", "SelfDescriptiveness",
          "Accountability", "SelfMonitoring", "UserEngagement", "Monitorability"}},
        {Article::A13,
         {"UserEngagement", "SelfDescriptiveness", "UserTransparency", "Interpretability",
          "Documentability", "AppropriatenessRecognizability"}},
        {Article::A14,
         {"Documentability", "Learnability", "ValueAlignment", "Accountability",
          "Interpretability", "Fairness", "Explainability", "Intervenability", "Monitorability",
          "UserErrorProtection"}},
        {Article::A15,
         {"FunctionalCorrectness", "Faultlessness", "Robustness",
          "AppropriatenessRecognizability", "SelfDescriptiveness", "FunctionalAdaptability",
          "FaultTolerance", "Integrity", "Resistance"}},
    };
    return table;
}

std::set<Article> articles_for_attribute(const MappingTable& mapping, const AttributeId& attr) {
    std::set<Article> out;
    for (const auto& [article, attrs] : mapping.entries)
        if (attrs.count(attr)) out.insert(article);
    return out;
}

std::vector<Finding> validate_mapping(const MappingTable& mapping, const QualityModel& model,
                                      bool strict) {
    std::vector<Finding> findings;
    for (const auto& [article, attrs] : mapping.entries) {
        for (const auto& attr : attrs) {
            if (find_attribute(model, attr)) continue;
            Finding f;
            f.severity = strict ? Severity::Error : Severity::Warning;
            f.code = codes::unknown_attribute;
            f.message = "mapped attribute '" + attr + "' under " + article_id(article) +
                        " does not resolve in quality model '" + model.name + "'";
            findings.push_back(std::move(f));
        }
    }
    return findings;
}

std::vector<CoverageRecord> coverage(const MappingTable& mapping,
                                     const std::set<AttributeId>& established) {
    std::vector<CoverageRecord> records;
    for (const auto& [article, attrs] : mapping.entries) {
        CoverageRecord rec;
        rec.article = article;
        rec.mapped = static_cast<int>(attrs.size());
        for (const auto& attr : attrs) {
            if (established.count(attr))
                ++rec.established;
            else
                rec.missing.push_back(attr);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace actcheck
