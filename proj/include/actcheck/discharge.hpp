#pragma once

#include "actcheck/supply_chain.hpp"

#include <map>
#include <string>
#include <vector>

namespace actcheck {

// Discharge state over the whole graph. Assumptions and guarantees are keyed
// by "Contract.Id"; requirements by their plain id.
//
//   requirement fulfilled  iff its status is attested
//   assumption fulfilled   iff accepted, or its discharge list is non-empty
//                          and every referenced target is fulfilled/established
//   guarantee established  iff every assumption of its contract is fulfilled
//
// The state is the least fixpoint of these rules: nothing is fulfilled
// without a derivation.
struct DischargeState {
    std::map<std::string, bool> requirements;
    std::map<std::string, bool> assumptions;
    std::map<std::string, bool> guarantees;
};

// Monotone iteration from the all-unfulfilled state; terminates in at most
// |elements| rounds and is deterministic regardless of iteration order.
DischargeState resolve_state(const SupplyChainGraph& graph);

// Cycles in the discharge dependency graph (assumption -> target,
// guarantee -> assumptions of its contract): strongly connected components
// of size >= 2 plus self-loops. Each cycle is reported as an ordered id
// sequence starting at its lexicographically smallest member.
std::vector<std::vector<std::string>> detect_cycles(const SupplyChainGraph& graph);

} // namespace actcheck
