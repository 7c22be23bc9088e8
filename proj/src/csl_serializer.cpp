#include "actcheck/csl/serializer.hpp"

#include <sstream>

namespace actcheck::csl {

std::string escape_string(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    out.push_back('"');
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

namespace {

void write_ref_list(std::ostream& os, const std::vector<NameRef>& refs) {
    os << '[';
    for (std::size_t i = 0; i < refs.size(); ++i) {
        if (i) os << ", ";
        os << refs[i].id;
    }
    os << ']';
}

} // namespace

std::string serialize(const SpecDocument& doc) {
    std::ostringstream os;
    os << "spec " << escape_string(doc.name) << " version " << doc.version << '\n';

    for (const auto& s : doc.stakeholders)
        os << "stakeholder " << s.id << " role " << escape_string(s.role) << '\n';

    for (const auto& r : doc.requirements) {
        os << "requirement " << r.id << " owner " << r.owner << " status "
           << status_keyword(r.status);
        if (!r.text.empty()) os << " text " << escape_string(r.text);
        os << '\n';
    }

    for (const auto& c : doc.contracts) {
        os << "contract " << c.id << " owner " << c.owner << " attribute " << c.attribute
           << " {\n";
        for (const auto& a : c.assumptions) {
            os << "  assume " << a.id << ' ' << escape_string(a.text);
            if (a.accepted) {
                os << " accepted";
            } else if (!a.discharged_by.empty()) {
                os << " discharged_by [";
                for (std::size_t i = 0; i < a.discharged_by.size(); ++i) {
                    if (i) os << ", ";
                    os << a.discharged_by[i].qualified_name();
                }
                os << ']';
            }
            os << '\n';
        }
        for (const auto& g : c.guarantees)
            os << "  guarantee " << g.id << ' ' << escape_string(g.text) << '\n';
        os << "}\n";
    }

    for (const auto& f : doc.flows) {
        os << "flow " << f.from << " -> " << f.to << " carries ";
        write_ref_list(os, f.carries);
        os << '\n';
    }

    for (const auto& a : doc.attributes) {
        os << "attribute " << a.id << " {\n";
        for (const auto& s : a.subs) {
            os << "  sub " << s.id;
            if (!s.definition.empty()) os << " def " << escape_string(s.definition);
            if (!s.aliases.empty()) {
                os << " alias ";
                for (std::size_t i = 0; i < s.aliases.size(); ++i) {
                    if (i) os << ", ";
                    os << escape_string(s.aliases[i]);
                }
            }
            os << '\n';
        }
        os << "}\n";
    }

    for (const auto& a : doc.articles) {
        os << "article " << a.article << ' ' << escape_string(a.title) << " maps ";
        write_ref_list(os, a.maps);
        os << '\n';
    }

    return os.str();
}

} // namespace actcheck::csl
