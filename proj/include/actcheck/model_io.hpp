#pragma once

#include "actcheck/act_mapping.hpp"
#include "actcheck/csl/ast.hpp"
#include "actcheck/finding.hpp"
#include "actcheck/quality_model.hpp"

#include <vector>

namespace actcheck {

// Builds a replacement quality model from `attribute { sub ... }`
// declarations. Structural defects surface as Error findings.
QualityModel model_from_document(const csl::SpecDocument& doc, std::vector<Finding>& findings);

// Builds a replacement mapping from `article ... maps [...]` declarations.
// Unknown article ids are Errors; attribute names are kept as written and
// checked against the active model by validate_mapping.
MappingTable mapping_from_document(const csl::SpecDocument& doc, std::vector<Finding>& findings);

} // namespace actcheck
