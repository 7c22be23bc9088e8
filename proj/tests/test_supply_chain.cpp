#include "actcheck/csl/parser.hpp"
#include "actcheck/fixtures.hpp"
#include "actcheck/supply_chain.hpp"

#include <doctest.h>

#include <algorithm>

using namespace actcheck;

namespace {

csl::SpecDocument parse_ok(const std::string& text, const std::string& file = "test.csl") {
    const csl::ParseResult result = csl::parse(text, file);
    REQUIRE(result.ok());
    return result.document;
}

csl::SpecDocument tsr_document() { return parse_ok(fixtures::tsr_example(), "tsr.csl"); }

bool has_code(const std::vector<Finding>& findings, const char* code) {
    return std::any_of(findings.begin(), findings.end(),
                       [&](const Finding& f) { return f.code == code; });
}

} // namespace

TEST_CASE("tsr fixture resolves into the expected graph") {
    const QualityModel model = builtin_extended_model();
    const ResolveResult result = resolve(tsr_document(), model);
    REQUIRE(result.ok());
    CHECK(result.findings.empty());

    const SupplyChainGraph& graph = *result.graph;
    CHECK(graph.spec_name == "tsr-explainability");
    CHECK(graph.stakeholders.size() == 3);
    CHECK(graph.flows.size() == 2);
    CHECK(graph.requirements.size() == 5);
    CHECK(graph.dependency_edge_count() == 5);

    const DesignContract* contract = graph.contract("ExplainabilityDC");
    REQUIRE(contract != nullptr);
    CHECK(contract->attribute == "Explainability");
    CHECK(contract->attribute_known);
    CHECK(graph.guarantee("ExplainabilityDC", "G1") != nullptr);
    CHECK(graph.stakeholder("ai_provider") != nullptr);
    CHECK(graph.requirement("TR3") != nullptr);
}

TEST_CASE("unknown discharge target is an error and prevents the graph") {
    const std::string text = "spec \"x\" version 1\n"
                             "stakeholder a role \"A\"\n"
                             "contract C owner a attribute Explainability {\n"
                             "  assume A1 \"t\" discharged_by [TR9]\n"
                             "  guarantee G1 \"g\"\n"
                             "}\n";
    const ResolveResult result = resolve(parse_ok(text), builtin_extended_model());
    CHECK_FALSE(result.ok());
    CHECK(has_errors(result.findings));
    CHECK(has_code(result.findings, codes::unresolved_ref));
}

TEST_CASE("unknown owners, endpoints, and qualified refs are errors") {
    const QualityModel model = builtin_extended_model();

    SUBCASE("requirement owner") {
        const auto doc = parse_ok("spec \"x\" version 1\nrequirement TR1 owner ghost status open\n");
        CHECK_FALSE(resolve(doc, model).ok());
    }
    SUBCASE("contract owner") {
        const auto doc = parse_ok("spec \"x\" version 1\n"
                                  "contract C owner ghost attribute Explainability {\n"
                                  "  guarantee G1 \"g\"\n}\n");
        CHECK_FALSE(resolve(doc, model).ok());
    }
    SUBCASE("flow endpoint") {
        const auto doc = parse_ok("spec \"x\" version 1\nstakeholder a role \"A\"\n"
                                  "requirement TR1 owner a status open\n"
                                  "flow a -> ghost carries [TR1]\n");
        CHECK_FALSE(resolve(doc, model).ok());
    }
    SUBCASE("unknown contract in qualified ref") {
        const auto doc = parse_ok("spec \"x\" version 1\nstakeholder a role \"A\"\n"
                                  "contract C owner a attribute Explainability {\n"
                                  "  assume A1 \"t\" discharged_by [Ghost.G1]\n"
                                  "  guarantee G1 \"g\"\n}\n");
        const ResolveResult result = resolve(doc, model);
        CHECK_FALSE(result.ok());
        CHECK(has_code(result.findings, codes::unresolved_ref));
    }
    SUBCASE("unknown guarantee in known contract") {
        const auto doc = parse_ok("spec \"x\" version 1\nstakeholder a role \"A\"\n"
                                  "contract C owner a attribute Explainability {\n"
                                  "  assume A1 \"t\" discharged_by [C.G9]\n"
                                  "  guarantee G1 \"g\"\n}\n");
        CHECK_FALSE(resolve(doc, model).ok());
    }
}

TEST_CASE("flow ownership violations warn by default and error in strict mode") {
    const std::string text = "spec \"x\" version 1\n"
                             "stakeholder a role \"A\"\n"
                             "stakeholder b role \"B\"\n"
                             "requirement TR1 owner b status open\n"
                             "flow a -> b carries [TR1]\n";
    const auto doc = parse_ok(text);
    const QualityModel model = builtin_extended_model();

    const ResolveResult lenient = resolve(doc, model);
    REQUIRE(lenient.ok());
    REQUIRE(lenient.findings.size() == 1);
    CHECK(lenient.findings.front().code == codes::flow_ownership);
    CHECK(lenient.findings.front().severity == Severity::Warning);

    const ResolveResult strict = resolve(doc, model, {true});
    CHECK_FALSE(strict.ok());
}

TEST_CASE("unknown attribute warns by default and errors in strict mode") {
    const std::string text = "spec \"x\" version 1\n"
                             "stakeholder a role \"A\"\n"
                             "contract C owner a attribute Quantumness {\n"
                             "  guarantee G1 \"g\"\n"
                             "}\n";
    const auto doc = parse_ok(text);
    const QualityModel model = builtin_extended_model();

    const ResolveResult lenient = resolve(doc, model);
    REQUIRE(lenient.ok());
    REQUIRE(lenient.findings.size() == 1);
    CHECK(lenient.findings.front().code == codes::unknown_attribute);
    CHECK(lenient.findings.front().message.find("closest:") != std::string::npos);
    CHECK_FALSE(lenient.graph->contracts.front().attribute_known);

    CHECK_FALSE(resolve(doc, model, {true}).ok());
}

TEST_CASE("attribute names resolve through aliases") {
    const std::string text = "spec \"x\" version 1\n"
                             "stakeholder a role \"A\"\n"
                             "contract C owner a attribute NonRepudiation {\n"
                             "  guarantee G1 \"g\"\n"
                             "}\n";
    const ResolveResult result = resolve(parse_ok(text), builtin_extended_model());
    REQUIRE(result.ok());
    CHECK(result.graph->contracts.front().attribute == "NonRepudiation");
    CHECK(result.graph->contracts.front().attribute_known);
}

TEST_CASE("flow_check accepts the fixture and flags a deleted flow") {
    const QualityModel model = builtin_extended_model();

    csl::SpecDocument doc = tsr_document();
    {
        const ResolveResult result = resolve(doc, model);
        REQUIRE(result.ok());
        CHECK(flow_check(*result.graph).empty());
    }

    // Drop the integrator flow; only TR5 crosses that edge.
    doc.flows.erase(std::remove_if(doc.flows.begin(), doc.flows.end(),
                                   [](const csl::FlowDecl& f) {
                                       return f.from == "ai_system_integrator";
                                   }),
                    doc.flows.end());
    const ResolveResult result = resolve(doc, model);
    REQUIRE(result.ok());
    const auto findings = flow_check(*result.graph);
    REQUIRE(findings.size() == 1);
    CHECK(findings.front().code == codes::flow_ownership);
    CHECK(findings.front().severity == Severity::Warning);
    CHECK(findings.front().message.find("TR5") != std::string::npos);
    CHECK(flow_check(*result.graph, true).front().severity == Severity::Error);
}

TEST_CASE("same-owner references need no flow") {
    const std::string text = "spec \"x\" version 1\n"
                             "stakeholder solo role \"Everything\"\n"
                             "requirement TR1 owner solo status attested\n"
                             "contract C owner solo attribute Explainability {\n"
                             "  assume A1 \"t\" discharged_by [TR1]\n"
                             "  guarantee G1 \"g\"\n"
                             "}\n";
    const ResolveResult result = resolve(parse_ok(text), builtin_extended_model());
    REQUIRE(result.ok());
    CHECK(flow_check(*result.graph).empty());
}
