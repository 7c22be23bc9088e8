#include "actcheck/discharge.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace actcheck {

namespace {

std::string key(const std::string& contract, const std::string& id) {
    return contract + "." + id;
}

} // namespace

DischargeState resolve_state(const SupplyChainGraph& graph) {
    DischargeState state;

    for (const auto& r : graph.requirements)
        state.requirements[r.id] = r.status == csl::RequirementStatus::Attested;
    for (const auto& c : graph.contracts) {
        for (const auto& a : c.assumptions) state.assumptions[key(c.id, a.id)] = false;
        for (const auto& g : c.guarantees) state.guarantees[key(c.id, g.id)] = false;
    }

    const auto ref_holds = [&](const ResolvedRef& ref) {
        if (ref.kind == ResolvedRef::Kind::Requirement) {
            auto it = state.requirements.find(ref.requirement);
            return it != state.requirements.end() && it->second;
        }
        auto it = state.guarantees.find(key(ref.contract, ref.guarantee));
        return it != state.guarantees.end() && it->second;
    };

    // Monotone iteration: each round can only flip elements to fulfilled, so
    // the loop runs at most |assumptions| + |guarantees| + 1 times.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : graph.contracts) {
            for (const auto& a : c.assumptions) {
                bool& slot = state.assumptions[key(c.id, a.id)];
                if (slot) continue;
                const bool derived =
                    a.accepted || (!a.discharge.empty() &&
                                   std::all_of(a.discharge.begin(), a.discharge.end(), ref_holds));
                if (derived) {
                    slot = true;
                    changed = true;
                }
            }
            for (const auto& g : c.guarantees) {
                bool& slot = state.guarantees[key(c.id, g.id)];
                if (slot) continue;
                const bool derived =
                    std::all_of(c.assumptions.begin(), c.assumptions.end(), [&](const auto& a) {
                        return state.assumptions.at(key(c.id, a.id));
                    });
                if (derived) {
                    slot = true;
                    changed = true;
                }
            }
        }
    }
    return state;
}

namespace {

// Discharge dependency graph over qualified ids: an assumption depends on
// its targets; a guarantee depends on every assumption of its contract.
// Requirements have no outgoing edges and cannot participate in cycles.
struct DependencyGraph {
    std::vector<std::string> nodes;              // sorted
    std::map<std::string, std::vector<std::string>> edges;

    static DependencyGraph build(const SupplyChainGraph& graph) {
        DependencyGraph dep;
        std::set<std::string> node_set;
        for (const auto& c : graph.contracts) {
            for (const auto& a : c.assumptions) {
                const std::string a_key = key(c.id, a.id);
                node_set.insert(a_key);
                for (const auto& ref : a.discharge) {
                    if (ref.kind != ResolvedRef::Kind::Guarantee) continue;
                    dep.edges[a_key].push_back(key(ref.contract, ref.guarantee));
                }
            }
            for (const auto& g : c.guarantees) {
                const std::string g_key = key(c.id, g.id);
                node_set.insert(g_key);
                for (const auto& a : c.assumptions)
                    dep.edges[g_key].push_back(key(c.id, a.id));
            }
        }
        dep.nodes.assign(node_set.begin(), node_set.end());
        for (auto& [node, out] : dep.edges) {
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        return dep;
    }
};

} // namespace

std::vector<std::vector<std::string>> detect_cycles(const SupplyChainGraph& graph) {
    const DependencyGraph dep = DependencyGraph::build(graph);

    // Tarjan over the sorted node list, iterative to keep deep chains safe.
    std::map<std::string, int> index, lowlink;
    std::set<std::string> on_stack;
    std::vector<std::string> stack;
    int next_index = 0;
    std::vector<std::set<std::string>> components;

    struct Frame {
        std::string node;
        std::size_t edge = 0;
    };

    for (const auto& root : dep.nodes) {
        if (index.count(root)) continue;
        std::vector<Frame> frames{{root}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack.insert(root);

        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto out_it = dep.edges.find(f.node);
            const std::vector<std::string> empty;
            const auto& out = out_it == dep.edges.end() ? empty : out_it->second;

            if (f.edge < out.size()) {
                const std::string& next = out[f.edge++];
                if (!index.count(next)) {
                    index[next] = lowlink[next] = next_index++;
                    stack.push_back(next);
                    on_stack.insert(next);
                    frames.push_back({next});
                } else if (on_stack.count(next)) {
                    lowlink[f.node] = std::min(lowlink[f.node], index[next]);
                }
                continue;
            }

            if (lowlink[f.node] == index[f.node]) {
                std::set<std::string> component;
                while (true) {
                    std::string popped = stack.back();
                    stack.pop_back();
                    on_stack.erase(popped);
                    component.insert(popped);
                    if (popped == f.node) break;
                }
                const bool self_loop = [&] {
                    const auto it = dep.edges.find(f.node);
                    return it != dep.edges.end() &&
                           std::find(it->second.begin(), it->second.end(), f.node) !=
                               it->second.end();
                }();
                if (component.size() >= 2 || self_loop)
                    components.push_back(std::move(component));
            }

            const std::string done = f.node;
            frames.pop_back();
            if (!frames.empty())
                lowlink[frames.back().node] =
                    std::min(lowlink[frames.back().node], lowlink[done]);
        }
    }

    // Order each component as a walk from its smallest id, smallest successor
    // first, so reported cycles are deterministic.
    std::vector<std::vector<std::string>> cycles;
    for (const auto& component : components) {
        std::vector<std::string> ordered;
        std::set<std::string> visited;
        std::string current = *component.begin();
        while (visited.insert(current).second) {
            ordered.push_back(current);
            const auto it = dep.edges.find(current);
            std::string next;
            if (it != dep.edges.end())
                for (const auto& candidate : it->second)
                    if (component.count(candidate) && !visited.count(candidate)) {
                        next = candidate;
                        break;
                    }
            if (next.empty()) break;
            current = next;
        }
        cycles.push_back(std::move(ordered));
    }

    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

} // namespace actcheck
