#include "actcheck/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace actcheck {

namespace {

std::string percent(double ratio) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f%%", ratio * 100.0);
    return buf;
}

int severity_rank(Severity s) {
    switch (s) {
    case Severity::Error: return 0;
    case Severity::Warning: return 1;
    case Severity::Info: return 2;
    }
    return 3;
}

void write_findings(std::ostream& os, const std::vector<Finding>& findings) {
    os << "FINDINGS\n";
    if (findings.empty()) {
        os << "  (none)\n";
        return;
    }
    std::vector<const Finding*> sorted;
    for (const auto& f : findings) sorted.push_back(&f);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Finding* a, const Finding* b) {
        if (a->severity != b->severity)
            return severity_rank(a->severity) < severity_rank(b->severity);
        const std::string fa = a->spans.empty() ? "" : a->spans.front().file;
        const std::string fb = b->spans.empty() ? "" : b->spans.front().file;
        if (fa != fb) return fa < fb;
        const int la = a->spans.empty() ? 0 : a->spans.front().line;
        const int lb = b->spans.empty() ? 0 : b->spans.front().line;
        return la < lb;
    });
    for (const Finding* f : sorted) {
        os << "  " << severity_name(f->severity) << "  " << f->code << "  " << f->message;
        if (!f->spans.empty()) os << "  (" << format_span(f->spans.front()) << ")";
        os << '\n';
    }
}

void write_coverage(std::ostream& os, const std::vector<CoverageRecord>& coverage) {
    os << "COVERAGE\n";
    if (coverage.empty()) {
        os << "  (none)\n";
        return;
    }
    for (const auto& rec : coverage)
        os << "  " << article_id(rec.article) << "  " << article_title(rec.article) << "  "
           << rec.established << "/" << rec.mapped << "  " << percent(rec.ratio()) << '\n';
}

} // namespace

std::string render_findings_text(const std::vector<Finding>& findings) {
    std::ostringstream os;
    write_findings(os, findings);
    return os.str();
}

std::string render_coverage_text(const std::vector<CoverageRecord>& coverage) {
    std::ostringstream os;
    write_coverage(os, coverage);
    return os.str();
}

std::string render_text(const VerificationReport& report) {
    std::ostringstream os;
    write_findings(os, report.findings);

    os << "STATE\n";
    const auto& st = report.state;
    if (st.requirements.empty() && st.assumptions.empty() && st.guarantees.empty()) {
        os << "  (none)\n";
    } else {
        const auto count_true = [](const std::map<std::string, bool>& m) {
            return std::count_if(m.begin(), m.end(), [](const auto& kv) { return kv.second; });
        };
        os << "  requirements: " << count_true(st.requirements) << "/" << st.requirements.size()
           << " fulfilled\n";
        os << "  assumptions: " << count_true(st.assumptions) << "/" << st.assumptions.size()
           << " fulfilled\n";
        os << "  guarantees: " << count_true(st.guarantees) << "/" << st.guarantees.size()
           << " established\n";
    }

    os << "ESTABLISHED ATTRIBUTES\n";
    if (report.established.empty()) {
        os << "  (none)\n";
    } else {
        for (const auto& attr : report.established) os << "  " << attr << '\n';
    }

    write_coverage(os, report.coverage);

    os << "CYCLES\n";
    if (report.cycles.empty()) {
        os << "  (none)\n";
    } else {
        for (const auto& cycle : report.cycles) {
            os << "  ";
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (i) os << " -> ";
                os << cycle[i];
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string render_trace_text(const std::vector<TraceChain>& chains) {
    std::ostringstream os;
    if (chains.empty()) {
        os << "(no chains)\n";
        return os.str();
    }
    for (const auto& chain : chains) {
        for (std::size_t i = 0; i < chain.elements.size(); ++i) {
            const auto& e = chain.elements[i];
            if (i) os << " -> ";
            os << e.id;
            if (!e.status.empty()) os << '[' << e.status << ']';
        }
        os << '\n';
    }
    return os.str();
}

} // namespace actcheck
