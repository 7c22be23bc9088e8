#include "actcheck/csl/parser.hpp"
#include "actcheck/csl/serializer.hpp"
#include "actcheck/fixtures.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace actcheck;
using namespace actcheck::csl;

TEST_CASE("the bundled fixture file matches the embedded example") {
    std::ifstream in(std::string(ACTCHECK_REPO_DIR) + "/examples/tsr.csl", std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == fixtures::tsr_example());
}

TEST_CASE("fixture is already in canonical form") {
    const std::string& text = fixtures::tsr_example();
    const ParseResult parsed = parse(text, "tsr.csl");
    REQUIRE(parsed.ok());
    CHECK(serialize(parsed.document) == text);
}

TEST_CASE("round trip on the fixture") {
    const ParseResult first = parse(fixtures::tsr_example(), "tsr.csl");
    REQUIRE(first.ok());
    const ParseResult second = parse(serialize(first.document), "tsr2.csl");
    REQUIRE(second.ok());
    CHECK(ast_equal(first.document, second.document));
}

TEST_CASE("header-only document serializes to the bare header") {
    SpecDocument doc;
    doc.name = "x";
    doc.version = 1;
    CHECK(serialize(doc) == "spec \"x\" version 1\n");
}

TEST_CASE("strings are re-escaped") {
    SpecDocument doc;
    doc.name = "with \"quote\" and \\slash";
    doc.version = 1;
    const std::string text = serialize(doc);
    CHECK(text == "spec \"with \\\"quote\\\" and \\\\slash\" version 1\n");
    const ParseResult reparsed = parse(text, "esc.csl");
    REQUIRE(reparsed.ok());
    CHECK(reparsed.document.name == doc.name);
}

TEST_CASE("round trip over random documents") {
    testsupport::Rng rng(424242);
    for (int trial = 0; trial < 250; ++trial) {
        const SpecDocument doc = testsupport::random_valid_document(rng);
        const std::string text = serialize(doc);
        const ParseResult parsed = parse(text, "gen.csl");
        INFO("document:\n" << text);
        REQUIRE(parsed.ok());
        CHECK(ast_equal(parsed.document, doc));

        // serialize is a fixpoint on its own output
        const ParseResult again = parse(serialize(parsed.document), "gen2.csl");
        REQUIRE(again.ok());
        CHECK(ast_equal(again.document, parsed.document));
    }
}

TEST_CASE("corrupted documents always fail with a valid span") {
    testsupport::Rng rng(171717);
    for (int trial = 0; trial < 250; ++trial) {
        const SpecDocument doc = testsupport::random_valid_document(rng);
        const std::string bad = testsupport::corrupt_source(serialize(doc), rng);
        const ParseResult parsed = parse(bad, "bad.csl");
        INFO("input:\n" << bad);
        REQUIRE_FALSE(parsed.ok());
        for (const auto& e : parsed.errors) {
            CHECK(e.span.line >= 1);
            CHECK(e.span.column >= 1);
            CHECK_FALSE(e.message.empty());
        }
    }
}
