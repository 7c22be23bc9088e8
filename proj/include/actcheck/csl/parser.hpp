#pragma once

#include "actcheck/csl/ast.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace actcheck::csl {

// Result of parsing one file. The document is populated only when there are
// no errors; on failure every independently recoverable error is reported.
struct ParseResult {
    SpecDocument document;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

ParseResult parse(std::string_view source, const std::string& file);

std::string format_error(const ParseError& error); // "file:line:col: message"

} // namespace actcheck::csl
