#pragma once

#include <string>

namespace actcheck {

// Location of a construct in an input file. Lines and columns are 1-based;
// length is the construct's extent in characters.
struct SourceSpan {
    std::string file;
    int line = 1;
    int column = 1;
    int length = 0;
};

// "file:line:column" for diagnostics.
std::string format_span(const SourceSpan& span);

} // namespace actcheck
