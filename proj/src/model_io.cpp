#include "actcheck/model_io.hpp"

namespace actcheck {

QualityModel model_from_document(const csl::SpecDocument& doc, std::vector<Finding>& findings) {
    QualityModel model;
    model.name = doc.name;

    for (const auto& decl : doc.attributes) {
        Characteristic ch;
        ch.id = decl.id;
        ch.display_name = decl.id;
        if (!is_valid_attribute_id(decl.id))
            findings.push_back({Severity::Error, codes::unknown_attribute,
                                "characteristic id '" + decl.id +
                                    "' is not UpperCamelCase ([A-Z][A-Za-z0-9]*)",
                                {decl.span}});
        for (const auto& s : decl.subs) {
            if (!is_valid_attribute_id(s.id))
                findings.push_back({Severity::Error, codes::unknown_attribute,
                                    "sub-characteristic id '" + s.id +
                                        "' is not UpperCamelCase ([A-Z][A-Za-z0-9]*)",
                                    {s.span}});
            SubCharacteristic sub;
            sub.id = s.id;
            sub.display_name = s.id;
            sub.definition = s.definition;
            sub.source = DefinitionSource::Other;
            for (const auto& alias : s.aliases) model.aliases[alias] = s.id;
            ch.children.push_back(std::move(sub));
        }
        model.characteristics.push_back(std::move(ch));
    }

    for (const auto& defect : validate_model(model))
        findings.push_back({Severity::Error, codes::duplicate_id,
                            "quality model '" + model.name + "': " + defect.message,
                            {doc.span}});
    return model;
}

MappingTable mapping_from_document(const csl::SpecDocument& doc,
                                   std::vector<Finding>& findings) {
    MappingTable table;
    for (const auto& decl : doc.articles) {
        const auto article = article_from_string(decl.article);
        if (!article) {
            findings.push_back({Severity::Error, codes::unresolved_ref,
                                "unknown article id '" + decl.article + "' (expected A9..A15)",
                                {decl.span}});
            continue;
        }
        auto& entry = table.entries[*article];
        for (const auto& ref : decl.maps) entry.insert(ref.id);
    }
    return table;
}

} // namespace actcheck
