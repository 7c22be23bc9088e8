#pragma once

#include "actcheck/csl/ast.hpp"

#include <string>

namespace actcheck::csl {

// Canonical text form: one declaration per construct, declaration order
// preserved within each kind, normalized whitespace, strings re-escaped.
// parse(serialize(doc)) is AST-equal to doc for every well-formed document.
std::string serialize(const SpecDocument& doc);

std::string escape_string(const std::string& text); // adds quotes and \" \\ escapes

} // namespace actcheck::csl
