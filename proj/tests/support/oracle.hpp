#pragma once

#include "actcheck/discharge.hpp"
#include "actcheck/supply_chain.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

// Brute-force reference for resolve_state: enumerate every truth assignment
// over assumptions and guarantees and take the pointwise minimum of the
// assignments that are closed under the discharge rules (nothing derivable
// is missing). Independent of the production fixpoint iteration.
inline actcheck::DischargeState oracle_state(const actcheck::SupplyChainGraph& graph) {
    using actcheck::ResolvedRef;

    struct Slot {
        bool is_assumption = false;
        const actcheck::DesignContract* contract = nullptr;
        const actcheck::Assumption* assumption = nullptr;
        const actcheck::Guarantee* guarantee = nullptr;
    };

    std::vector<Slot> slots;
    std::map<std::string, std::size_t> slot_index;
    for (const auto& c : graph.contracts) {
        for (const auto& a : c.assumptions) {
            slot_index[c.id + "." + a.id] = slots.size();
            slots.push_back({true, &c, &a, nullptr});
        }
        for (const auto& g : c.guarantees) {
            slot_index[c.id + "." + g.id] = slots.size();
            slots.push_back({false, &c, nullptr, &g});
        }
    }
    if (slots.size() > 20) throw std::runtime_error("oracle: too many discharge elements");

    std::map<std::string, bool> requirements;
    for (const auto& r : graph.requirements)
        requirements[r.id] = r.status == actcheck::csl::RequirementStatus::Attested;

    const auto bit = [](std::uint32_t mask, std::size_t i) { return (mask >> i) & 1u; };

    const auto derived = [&](std::uint32_t mask, const Slot& slot) -> bool {
        if (slot.is_assumption) {
            const auto& a = *slot.assumption;
            if (a.accepted) return true;
            if (a.discharge.empty()) return false;
            for (const auto& ref : a.discharge) {
                if (ref.kind == ResolvedRef::Kind::Requirement) {
                    if (!requirements.at(ref.requirement)) return false;
                } else {
                    if (!bit(mask, slot_index.at(ref.contract + "." + ref.guarantee)))
                        return false;
                }
            }
            return true;
        }
        for (const auto& a : slot.contract->assumptions)
            if (!bit(mask, slot_index.at(slot.contract->id + "." + a.id))) return false;
        return true;
    };

    // An assignment is closed when everything derivable from it is already
    // assigned true. The all-true assignment is always closed, so the meet
    // below is well-defined and equals the least fixpoint.
    const std::uint32_t all = slots.empty() ? 0u : (1u << slots.size()) - 1u;
    std::uint32_t best = all;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        bool closed = true;
        for (std::size_t i = 0; i < slots.size() && closed; ++i)
            if (!bit(mask, i) && derived(mask, slots[i])) closed = false;
        if (closed) best &= mask;
        if (all == 0) break;
    }

    actcheck::DischargeState state;
    state.requirements = requirements;
    for (const auto& [key, i] : slot_index) {
        if (slots[i].is_assumption)
            state.assumptions[key] = bit(best, i) != 0;
        else
            state.guarantees[key] = bit(best, i) != 0;
    }
    return state;
}

} // namespace testsupport
