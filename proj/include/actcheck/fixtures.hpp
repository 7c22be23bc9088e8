#pragma once

#include <optional>
#include <string>
#include <vector>

namespace actcheck::fixtures {

// The bundled traffic-sign-recognition supply-chain example, in canonical
// CSL form. This is the text `init --example tsr` emits.
const std::string& tsr_example();

std::vector<std::string> example_names();
std::optional<std::string> example_by_name(const std::string& name);

} // namespace actcheck::fixtures
