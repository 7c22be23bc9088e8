#include "actcheck/csl/parser.hpp"
#include "actcheck/fixtures.hpp"
#include "actcheck/report.hpp"
#include "actcheck/verify.hpp"

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

VerificationRun run_doc(csl::SpecDocument doc) {
    return verify_run({std::move(doc)}, builtin_extended_model(), builtin_mapping());
}

const CoverageRecord& record_for(const VerificationReport& report, Article article) {
    const auto it = std::find_if(report.coverage.begin(), report.coverage.end(),
                                 [&](const CoverageRecord& r) { return r.article == article; });
    REQUIRE(it != report.coverage.end());
    return *it;
}

} // namespace

TEST_CASE("verifying the fixture establishes Explainability") {
    const VerificationRun run = run_doc(tsr_document());
    const VerificationReport& report = run.report;

    CHECK(report.resolved);
    CHECK(report.findings.empty());
    CHECK(report.cycles.empty());
    CHECK(report.established == std::vector<AttributeId>{"Explainability"});
    CHECK(report.state.guarantees.at("ExplainabilityDC.G1"));

    const CoverageRecord& a14 = record_for(report, Article::A14);
    CHECK(a14.mapped == 10);
    CHECK(a14.established == 1);
    for (Article article : all_articles)
        if (article != Article::A14) CHECK(record_for(report, article).established == 0);
}

TEST_CASE("an open requirement surfaces as an open assumption") {
    csl::SpecDocument doc = tsr_document();
    for (auto& r : doc.requirements)
        if (r.id == "TR4") r.status = csl::RequirementStatus::Open;

    const VerificationReport report = run_doc(std::move(doc)).report;
    CHECK(report.established.empty());
    for (const auto& rec : report.coverage) CHECK(rec.established == 0);
    CHECK_FALSE(report.state.guarantees.at("ExplainabilityDC.G1"));

    const auto open = std::find_if(report.findings.begin(), report.findings.end(),
                                   [](const Finding& f) { return f.code == codes::open_assumption; });
    REQUIRE(open != report.findings.end());
    CHECK(open->severity == Severity::Warning);
    CHECK(open->message.find("A3") != std::string::npos);
    CHECK(report.findings.size() == 1);
}

TEST_CASE("assumptions with no discharge and no acceptance are flagged") {
    const auto doc = parse_ok("spec \"x\" version 1\n"
                              "stakeholder a role \"A\"\n"
                              "contract C owner a attribute Explainability {\n"
                              "  assume A1 \"floating\"\n"
                              "  guarantee G1 \"g\"\n"
                              "}\n");
    const VerificationReport report = run_doc(doc).report;
    CHECK(std::any_of(report.findings.begin(), report.findings.end(), [](const Finding& f) {
        return f.code == codes::empty_discharge && f.severity == Severity::Info;
    }));
    CHECK(std::any_of(report.findings.begin(), report.findings.end(), [](const Finding& f) {
        return f.code == codes::open_assumption;
    }));
}

TEST_CASE("a header-only document verifies to an empty report") {
    const VerificationReport report = run_doc(parse_ok("spec \"empty\" version 1\n")).report;
    CHECK(report.resolved);
    CHECK(report.findings.empty());
    CHECK(report.state.requirements.empty());
    CHECK(report.state.assumptions.empty());
    CHECK(report.state.guarantees.empty());
    CHECK(report.established.empty());
    for (const auto& rec : report.coverage) {
        CHECK(rec.established == 0);
        CHECK(rec.ratio() == 0.0);
    }
}

TEST_CASE("cycles are reported as findings and in the report") {
    const auto doc = parse_ok("spec \"cycles\" version 1\n"
                              "stakeholder s1 role \"A\"\n"
                              "contract X owner s1 attribute Explainability {\n"
                              "  assume XA1 \"needs Y\" discharged_by [Y.YG1]\n"
                              "  guarantee XG1 \"x\"\n"
                              "}\n"
                              "contract Y owner s1 attribute Traceability {\n"
                              "  assume YA1 \"needs X\" discharged_by [X.XG1]\n"
                              "  guarantee YG1 \"y\"\n"
                              "}\n");
    const VerificationReport report = run_doc(doc).report;
    REQUIRE(report.cycles.size() == 1);
    const auto cycle_finding =
        std::find_if(report.findings.begin(), report.findings.end(),
                     [](const Finding& f) { return f.code == codes::circular_discharge; });
    REQUIRE(cycle_finding != report.findings.end());
    CHECK(cycle_finding->message.find("X.XA1") != std::string::npos);
    CHECK_FALSE(cycle_finding->spans.empty());
}

TEST_CASE("merge errors abort verification with findings only") {
    const auto a = parse_ok("spec \"a\" version 1\nstakeholder s role \"S\"\n"
                            "requirement TR1 owner s status open\n",
                            "a.csl");
    const auto b = parse_ok("spec \"b\" version 1\nstakeholder t role \"T\"\n"
                            "requirement TR1 owner t status open\n",
                            "b.csl");
    const VerificationReport report =
        verify({a, b}, builtin_extended_model(), builtin_mapping());
    CHECK_FALSE(report.resolved);
    CHECK(has_errors(report.findings));
    CHECK(report.state.requirements.empty());
    CHECK(report.coverage.empty());
    CHECK(report.established.empty());
}

TEST_CASE("strict mode turns a lenient run into an aborted one") {
    const auto doc = parse_ok("spec \"x\" version 1\n"
                              "stakeholder a role \"A\"\n"
                              "contract C owner a attribute Quantumness {\n"
                              "  guarantee G1 \"g\"\n"
                              "}\n");
    const VerificationReport lenient =
        verify({doc}, builtin_extended_model(), builtin_mapping());
    CHECK(lenient.resolved);

    const VerificationReport strict =
        verify({doc}, builtin_extended_model(), builtin_mapping(), {true});
    CHECK_FALSE(strict.resolved);
    CHECK(has_errors(strict.findings));
}

TEST_CASE("verification is deterministic") {
    const auto doc = tsr_document();
    const VerificationReport first =
        verify({doc}, builtin_extended_model(), builtin_mapping());
    const VerificationReport second =
        verify({doc}, builtin_extended_model(), builtin_mapping());
    CHECK(render_json(first) == render_json(second));
    CHECK(render_text(first) == render_text(second));
}

TEST_CASE("trace answers article, requirement, and attribute queries") {
    const VerificationRun run = run_doc(tsr_document());
    REQUIRE(run.graph.has_value());
    const auto query = [&](const std::string& q) {
        return trace(*run.graph, run.report.state, builtin_extended_model(), builtin_mapping(),
                     q);
    };

    SUBCASE("article query reaches the developer") {
        const TraceResult result = query("A14");
        REQUIRE(result.ok());
        REQUIRE(result.chains.size() == 5); // one per discharge reference
        const auto ids = [](const TraceChain& chain) {
            std::vector<std::string> out;
            for (const auto& e : chain.elements) out.push_back(e.id);
            return out;
        };
        CHECK(ids(result.chains.front()) ==
              std::vector<std::string>{"A14", "Explainability", "ExplainabilityDC", "G1", "A1",
                                       "TR1", "ai_developer"});
        CHECK(result.chains.front().elements[3].status == "established");
        CHECK(result.chains.front().elements[5].status == "fulfilled");
        // lexicographic ordering of whole chains
        for (std::size_t i = 1; i < result.chains.size(); ++i)
            CHECK(ids(result.chains[i - 1]) <= ids(result.chains[i]));
    }

    SUBCASE("requirement query walks back up to the article") {
        const TraceResult result = query("TR5");
        REQUIRE(result.ok());
        REQUIRE(result.chains.size() == 1);
        std::vector<std::string> ids;
        for (const auto& e : result.chains.front().elements) ids.push_back(e.id);
        CHECK(ids == std::vector<std::string>{"TR5", "A4", "ExplainabilityDC", "Explainability",
                                              "A14"});
    }

    SUBCASE("attribute query matches the article tail") {
        const TraceResult result = query("Explainability");
        REQUIRE(result.ok());
        CHECK(result.chains.size() == 5);
        CHECK(result.chains.front().elements.front().kind == "attribute");
    }

    SUBCASE("articles without matching contracts yield no chains") {
        const TraceResult result = query("A9");
        REQUIRE(result.ok());
        CHECK(result.chains.empty());
    }

    SUBCASE("unknown ids are reported") {
        const TraceResult result = query("NoSuchThing");
        REQUIRE_FALSE(result.ok());
        CHECK(result.error->find("NoSuchThing") != std::string::npos);
    }
}
