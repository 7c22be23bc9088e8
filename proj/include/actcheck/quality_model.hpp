#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace actcheck {

// Canonical attribute identifier, UpperCamelCase (e.g. "Explainability").
using AttributeId = std::string;

// Where a sub-characteristic's definition comes from. ExtendedModel marks
// definitions written specifically for the extended AI quality model; the
// ISO values point at the standard that already defines the term.
enum class DefinitionSource {
    ExtendedModel,
    Iso25059,
    Iso25010,
    Iso25012,
    Iso8800,
    Other,
};

struct SubCharacteristic {
    AttributeId id;
    std::string display_name;
    std::string definition;
    DefinitionSource source = DefinitionSource::Other;
};

struct Characteristic {
    AttributeId id;
    std::string display_name;
    std::vector<SubCharacteristic> children;
};

// A two-level forest of quality characteristics. Aliases map alternate
// spellings (including known typos in source material) onto canonical ids.
// Immutable once built; all operations below are read-only.
struct QualityModel {
    std::string name;
    std::vector<Characteristic> characteristics;
    std::map<std::string, AttributeId> aliases;
};

struct ModelDefect {
    std::string code; // duplicate-id | duplicate-parent | dangling-alias | empty-definition
    std::string message;
};

// The built-in extended product quality model for AI systems.
QualityModel builtin_extended_model();

// True when `name` matches [A-Z][A-Za-z0-9]*.
bool is_valid_attribute_id(const std::string& name);

// Lowercases and strips hyphens/whitespace; the key used for alias lookup.
std::string normalize_attribute_name(const std::string& name);

// Resolves a human-written name to a canonical id: exact canonical match
// first, then case/hyphen/whitespace-insensitive match against canonical
// names and aliases. No fuzzy guessing; nullopt when nothing matches.
std::optional<AttributeId> find_attribute(const QualityModel& model, const std::string& name);

// Closest canonical names by edit distance, for "did you mean" diagnostics.
std::vector<AttributeId> suggest_attributes(const QualityModel& model, const std::string& name,
                                            std::size_t count = 3);

// Structural checks: duplicate ids, sub-characteristics with multiple
// parents, dangling aliases, empty ExtendedModel definitions.
std::vector<ModelDefect> validate_model(const QualityModel& model);

// Parent characteristic of a sub-characteristic; nullopt for unknown ids
// and for top-level characteristics.
std::optional<AttributeId> parent_of(const QualityModel& model, const AttributeId& sub);

// Every id in the model, characteristics first, in declaration order.
std::vector<AttributeId> all_attribute_ids(const QualityModel& model);

} // namespace actcheck
