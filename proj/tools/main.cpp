#include "actcheck/act_mapping.hpp"
#include "actcheck/csl/parser.hpp"
#include "actcheck/fixtures.hpp"
#include "actcheck/model_io.hpp"
#include "actcheck/quality_model.hpp"
#include "actcheck/report.hpp"
#include "actcheck/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace actcheck;

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::vector<std::string> inputs;
    std::string format = "text";
    bool strict = false;
    std::string model_file;
    std::string mapping_file;
    std::string query;
    std::string example;
};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Parses one CSL file; prints errors to stderr and returns nullopt on failure.
std::optional<csl::SpecDocument> parse_file(const std::string& path) {
    const auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return std::nullopt;
    }
    csl::ParseResult result = csl::parse(*text, path);
    if (!result.ok()) {
        for (const auto& e : result.errors) std::cerr << csl::format_error(e) << '\n';
        return std::nullopt;
    }
    return std::move(result.document);
}

void print_findings(std::ostream& os, const std::vector<Finding>& findings) {
    os << render_findings_text(findings);
}

bool has_warnings(const std::vector<Finding>& findings) {
    return std::any_of(findings.begin(), findings.end(),
                       [](const Finding& f) { return f.severity == Severity::Warning; });
}

int findings_exit(const std::vector<Finding>& findings, bool strict) {
    if (has_errors(findings)) return kExitFindings;
    if (strict && has_warnings(findings)) return kExitFindings;
    return kExitOk;
}

struct Session {
    Options opt;
    std::vector<csl::SpecDocument> docs;
    QualityModel model;
    MappingTable mapping;
    std::vector<Finding> config_findings; // custom model/mapping diagnostics

    // Loads inputs and replacement model/mapping. Returns false on input
    // errors, which map to exit code 2.
    bool load() {
        for (const auto& path : opt.inputs) {
            auto doc = parse_file(path);
            if (!doc) return false;
            docs.push_back(std::move(*doc));
        }

        model = builtin_extended_model();
        mapping = builtin_mapping();

        if (!opt.model_file.empty()) {
            auto doc = parse_file(opt.model_file);
            if (!doc) return false;
            model = model_from_document(*doc, config_findings);
        }
        if (!opt.mapping_file.empty()) {
            auto doc = parse_file(opt.mapping_file);
            if (!doc) return false;
            mapping = mapping_from_document(*doc, config_findings);
        }
        if (has_errors(config_findings)) {
            print_findings(std::cerr, config_findings);
            return false;
        }

        const auto mapping_findings = validate_mapping(mapping, model, opt.strict);
        config_findings.insert(config_findings.end(), mapping_findings.begin(),
                               mapping_findings.end());
        return true;
    }

    std::string spec_name() const { return docs.empty() ? "" : docs.front().name; }
    bool json() const { return opt.format == "json"; }
};

int cmd_validate(Session& s) {
    std::vector<Finding> findings = s.config_findings;
    csl::MergeResult merged = csl::merge(s.docs);
    findings.insert(findings.end(), merged.findings.begin(), merged.findings.end());
    if (merged.ok()) {
        ResolveResult resolved = resolve(merged.document, s.model, {s.opt.strict});
        findings.insert(findings.end(), resolved.findings.begin(), resolved.findings.end());
    }
    if (s.json())
        std::cout << render_findings_json(s.spec_name(), findings);
    else
        print_findings(std::cout, findings);
    return findings_exit(findings, s.opt.strict);
}

VerificationRun run_verification(Session& s) {
    VerificationRun run = verify_run(s.docs, s.model, s.mapping, {s.opt.strict});
    run.report.findings.insert(run.report.findings.begin(), s.config_findings.begin(),
                               s.config_findings.end());
    return run;
}

int cmd_check(Session& s) {
    VerificationRun run = run_verification(s);
    std::cout << (s.json() ? render_json(run.report) : render_text(run.report));

    int code = findings_exit(run.report.findings, s.opt.strict);
    if (code == kExitOk)
        for (const auto& [id, established] : run.report.state.guarantees)
            if (!established) code = kExitFindings;
    return code;
}

int cmd_coverage(Session& s) {
    VerificationRun run = run_verification(s);
    if (!run.report.resolved) {
        print_findings(std::cerr, run.report.findings);
        return kExitFindings;
    }
    std::cout << (s.json() ? render_coverage_json(run.report.coverage)
                           : render_coverage_text(run.report.coverage));
    return findings_exit(run.report.findings, s.opt.strict);
}

int cmd_trace(Session& s) {
    VerificationRun run = run_verification(s);
    if (!run.graph) {
        print_findings(std::cerr, run.report.findings);
        return kExitFindings;
    }
    TraceResult result = trace(*run.graph, run.report.state, s.model, s.mapping, s.opt.query);
    if (!result.ok()) {
        std::cerr << "error: " << *result.error << '\n';
        return kExitUsage;
    }
    std::cout << (s.json() ? render_trace_json(result.chains)
                           : render_trace_text(result.chains));
    return findings_exit(run.report.findings, s.opt.strict);
}

int cmd_init(const Options& opt) {
    const auto example = fixtures::example_by_name(opt.example);
    if (!example) {
        std::cerr << "error: unknown example '" << opt.example << "' (available:";
        for (const auto& name : fixtures::example_names()) std::cerr << ' ' << name;
        std::cerr << ")\n";
        return kExitUsage;
    }
    std::cout << *example;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Static compliance checker for assume-guarantee supply-chain specs"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("inputs", opt.inputs, "CSL spec files (merged in order)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_flag("--strict", opt.strict, "Treat warnings as errors");
        cmd->add_option("--model", opt.model_file, "Replacement quality model file")
            ->check(CLI::ExistingFile);
        cmd->add_option("--mapping", opt.mapping_file, "Replacement article mapping file")
            ->check(CLI::ExistingFile);
    };

    CLI::App* validate = app.add_subcommand("validate", "Parse and resolve; report findings");
    add_common(validate);
    CLI::App* check = app.add_subcommand("check", "Verify discharge state and coverage");
    add_common(check);
    CLI::App* coverage = app.add_subcommand("coverage", "Report per-article coverage");
    add_common(coverage);
    CLI::App* trace = app.add_subcommand("trace", "Print traceability chains for an id");
    add_common(trace);
    trace->add_option("--query", opt.query, "Article, attribute, or requirement id")->required();
    CLI::App* init = app.add_subcommand("init", "Write a bundled example spec to stdout");
    init->add_option("--example", opt.example, "Example name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (init->parsed()) return cmd_init(opt);

    Session session;
    session.opt = std::move(opt);
    if (!session.load()) return kExitUsage;

    if (validate->parsed()) return cmd_validate(session);
    if (check->parsed()) return cmd_check(session);
    if (coverage->parsed()) return cmd_coverage(session);
    if (trace->parsed()) return cmd_trace(session);
    return kExitUsage;
}
