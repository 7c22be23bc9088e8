#pragma once

#include "actcheck/finding.hpp"
#include "actcheck/quality_model.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace actcheck {

// The high-risk-system requirement articles covered by the mapping.
enum class Article { A9, A10, A11, A12, A13, A14, A15 };

inline constexpr std::array<Article, 7> all_articles = {
    Article::A9,  Article::A10, Article::A11, Article::A12,
    Article::A13, Article::A14, Article::A15,
};

const char* article_id(Article article);    // "A9" .. "A15"
const char* article_title(Article article); // e.g. "Human Oversight"
std::optional<Article> article_from_string(const std::string& id);

// Map from article to the quality sub-attributes that address it.
struct MappingTable {
    std::map<Article, std::set<AttributeId>> entries;
};

// The built-in article-to-attribute mapping, deduplicated.
MappingTable builtin_mapping();

std::set<Article> articles_for_attribute(const MappingTable& mapping, const AttributeId& attr);

// One finding per mapped attribute that does not resolve in the model.
// Warnings by default, Errors in strict mode.
std::vector<Finding> validate_mapping(const MappingTable& mapping, const QualityModel& model,
                                      bool strict = false);

// Per-article coverage given a set of established attributes. The ratio is
// a tool metric, not a legal measure of compliance.
struct CoverageRecord {
    Article article = Article::A9;
    int mapped = 0;
    int established = 0;
    std::vector<AttributeId> missing; // sorted

    double ratio() const { return mapped == 0 ? 0.0 : static_cast<double>(established) / mapped; }
};

// One record per article in the mapping, ordered A9..A15.
std::vector<CoverageRecord> coverage(const MappingTable& mapping,
                                     const std::set<AttributeId>& established);

} // namespace actcheck
