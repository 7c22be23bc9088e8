#include "actcheck/fixtures.hpp"

namespace actcheck::fixtures {

namespace {

// Traffic-sign-recognition supply chain: an AI provider's explainability
// contract discharged by technical requirements from the developer and the
// system integrator.
const std::string tsr_text = R"(spec "tsr-explainability" version 1
stakeholder ai_developer role "AI Developer"
stakeholder ai_provider role "AI Product or Service Provider"
stakeholder ai_system_integrator role "AI System Integrator"
requirement TR1 owner ai_developer status attested text "The model architecture is well documented so that an expert user can understand the inner workings of the TSR component."
requirement TR2 owner ai_developer status attested text "An ex-ante explanation is available for the user of the AI system. For example, documentation containing global class-wise explanations is provided, using a state-of-the-art explainability method."
requirement TR3 owner ai_developer status attested text "Documentation containing train/test/validation data, pre- and post- processing operations, optimization method, loss function, and hyperparamaters used for training, is available."
requirement TR4 owner ai_developer status attested text "An ex-post explanation is available for the user of the AI system which satisfies the required level of explainability. For example, a local, post-modelling explainability method such as SHAP is implemented."
requirement TR5 owner ai_system_integrator status attested text "The AI system integrator shall provide requirements for the TSR interface within the system."
contract ExplainabilityDC owner ai_provider attribute Explainability {
  assume A1 "The TSR component can be analyzed to understand its behavior. Documentation with global class-wise explanations is provided and representative." discharged_by [TR1, TR2]
  assume A2 "Appropriate documentation regarding the development of the TSR model is available." discharged_by [TR3]
  assume A3 "The TSR can express important factors influencing its predictions in a way that humans can understand." discharged_by [TR4]
  assume A4 "Documentation from the AI system integrator regarding how sub-systems interact in the overall car is available." discharged_by [TR5]
  guarantee G1 "Appropriate documentation regarding the design, development, licensing, and usage restrictions of the TSR is available."
}
flow ai_developer -> ai_provider carries [TR1, TR2, TR3, TR4]
flow ai_system_integrator -> ai_provider carries [TR5]
)";

} // namespace

const std::string& tsr_example() { return tsr_text; }

std::vector<std::string> example_names() { return {"tsr"}; }

std::optional<std::string> example_by_name(const std::string& name) {
    if (name == "tsr") return tsr_text;
    return std::nullopt;
}

} // namespace actcheck::fixtures
