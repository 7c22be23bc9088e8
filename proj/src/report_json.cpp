#include "actcheck/report.hpp"

#include <json.hpp>

namespace actcheck {

namespace {

using json = nlohmann::ordered_json;

json span_json(const SourceSpan& span) {
    return json{{"file", span.file},
                {"line", span.line},
                {"column", span.column},
                {"length", span.length}};
}

json findings_json(const std::vector<Finding>& findings) {
    json arr = json::array();
    for (const auto& f : findings) {
        json spans = json::array();
        for (const auto& s : f.spans) spans.push_back(span_json(s));
        arr.push_back(json{{"severity", severity_name(f.severity)},
                           {"code", f.code},
                           {"message", f.message},
                           {"spans", std::move(spans)}});
    }
    return arr;
}

json state_json(const DischargeState& state) {
    json requirements = json::object();
    for (const auto& [id, fulfilled] : state.requirements)
        requirements[id] = fulfilled ? "fulfilled" : "unfulfilled";
    json assumptions = json::object();
    for (const auto& [id, fulfilled] : state.assumptions)
        assumptions[id] = fulfilled ? "fulfilled" : "unfulfilled";
    json guarantees = json::object();
    for (const auto& [id, established] : state.guarantees)
        guarantees[id] = established ? "established" : "not-established";
    return json{{"requirements", std::move(requirements)},
                {"assumptions", std::move(assumptions)},
                {"guarantees", std::move(guarantees)}};
}

json coverage_json_value(const std::vector<CoverageRecord>& coverage) {
    json arr = json::array();
    for (const auto& rec : coverage) {
        arr.push_back(json{{"article", article_id(rec.article)},
                           {"title", article_title(rec.article)},
                           {"mapped", rec.mapped},
                           {"established", rec.established},
                           {"ratio", rec.ratio()},
                           {"missing", rec.missing}});
    }
    return arr;
}

} // namespace

std::string render_json(const VerificationReport& report) {
    json doc;
    doc["spec"] = report.spec_name;
    doc["findings"] = findings_json(report.findings);
    doc["state"] = state_json(report.state);
    doc["established"] = report.established;
    doc["coverage"] = coverage_json_value(report.coverage);
    doc["cycles"] = report.cycles;
    return doc.dump(2) + "\n";
}

std::string render_findings_json(const std::string& spec_name,
                                 const std::vector<Finding>& findings) {
    json doc;
    doc["spec"] = spec_name;
    doc["findings"] = findings_json(findings);
    return doc.dump(2) + "\n";
}

std::string render_coverage_json(const std::vector<CoverageRecord>& coverage) {
    json doc;
    doc["coverage"] = coverage_json_value(coverage);
    return doc.dump(2) + "\n";
}

std::string render_trace_json(const std::vector<TraceChain>& chains) {
    json arr = json::array();
    for (const auto& chain : chains) {
        json elements = json::array();
        for (const auto& e : chain.elements) {
            json elem;
            elem["kind"] = e.kind;
            elem["id"] = e.id;
            if (!e.status.empty()) elem["status"] = e.status;
            elements.push_back(std::move(elem));
        }
        arr.push_back(std::move(elements));
    }
    json doc;
    doc["chains"] = std::move(arr);
    return doc.dump(2) + "\n";
}

} // namespace actcheck
