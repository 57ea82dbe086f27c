// contract.hpp -- drop pop transitions no trace can fire, then unreachable states.
#pragma once

#include <map>

#include "grammar.hpp"
#include "vpts.hpp"

namespace vpconf {

// contract plus the receipts: which pops were dropped, and for every retained
// pop the shortest observable prefix that parks the machine in front of it
// with a matching stack top (empty stack for pops on kBottom).
struct ContractEvidence {
    Vpts result;
    std::set<Transition> removedPops;
    std::map<Transition, Word> popEvidence;
};

inline ContractEvidence contractWithEvidence(const Vpts& v) {
    detail::GrammarAnalysis g(v.alphabet, v.states, v.initial, v.transitions);
    ContractEvidence out;
    std::set<Transition> kept;
    for (const auto& t : v.transitions) {
        if (kindOfLabel(v.alphabet, t.label) == Kind::Pop) {
            const detail::BestWord& at = g.reachWithTop(t.from, t.stack);
            if (!at.known()) {
                out.removedPops.insert(t);
                continue;
            }
            out.popEvidence[t] = at.word;
            kept.insert(t);
        } else if (g.reach(t.from).known()) {
            kept.insert(t);
        }
        // a push or simple move from an unreached state is dropped with the
        // state itself below
    }

    std::map<std::string, std::vector<std::string>> succ;
    for (const auto& t : kept) succ[t.from].push_back(t.to);
    std::set<std::string> alive(v.initial.begin(), v.initial.end());
    std::vector<std::string> work(v.initial.begin(), v.initial.end());
    while (!work.empty()) {
        std::string u = work.back();
        work.pop_back();
        auto it = succ.find(u);
        if (it == succ.end()) continue;
        for (const auto& n : it->second)
            if (alive.insert(n).second) work.push_back(n);
    }

    out.result.alphabet = v.alphabet;
    out.result.stackAlphabet = v.stackAlphabet;
    out.result.states = alive;
    out.result.initial = v.initial;
    for (const auto& t : kept)
        if (alive.count(t.from)) out.result.transitions.insert(t);
    return out;
}

inline Vpts contract(const Vpts& v) { return contractWithEvidence(v).result; }

} // namespace vpconf
