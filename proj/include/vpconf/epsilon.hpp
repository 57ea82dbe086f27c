// epsilon.hpp -- silent-move elimination, the general and the determinism-preserving way.
#pragma once

#include <algorithm>
#include <map>

#include "vpa.hpp"

namespace vpconf {

namespace detail {

// E(s): states reachable from s over silent edges alone, s included
inline std::map<std::string, std::set<std::string>> epsilonReach(const Vpa& a) {
    std::map<std::string, std::vector<std::string>> succ;
    for (const auto& t : a.transitions)
        if (t.label == kEps) succ[t.from].push_back(t.to);
    std::map<std::string, std::set<std::string>> reach;
    for (const auto& s : a.states) {
        auto& r = reach[s];
        r.insert(s);
        std::vector<std::string> work{s};
        while (!work.empty()) {
            std::string u = work.back();
            work.pop_back();
            auto it = succ.find(u);
            if (it == succ.end()) continue;
            for (const auto& v : it->second)
                if (r.insert(v).second) work.push_back(v);
        }
    }
    return reach;
}

// cycles of the silent successor graph; callers guarantee out-degree <= 1
inline std::vector<std::set<std::string>> epsilonCycles(const Vpa& a) {
    std::map<std::string, std::string> next;
    for (const auto& t : a.transitions)
        if (t.label == kEps) next[t.from] = t.to;
    std::map<std::string, int> color; // 0 fresh, 1 on the current walk, 2 settled
    std::vector<std::set<std::string>> cycles;
    for (const auto& s : a.states) {
        if (color[s]) continue;
        std::vector<std::string> path;
        std::string u = s;
        while (true) {
            if (color[u] == 1) {
                std::set<std::string> cycle;
                for (auto it = std::find(path.begin(), path.end(), u); it != path.end(); ++it)
                    cycle.insert(*it);
                cycles.push_back(std::move(cycle));
                break;
            }
            if (color[u] == 2) break;
            color[u] = 1;
            path.push_back(u);
            auto it = next.find(u);
            if (it == next.end()) break;
            u = it->second;
        }
        for (const auto& v : path) color[v] = 2;
    }
    return cycles;
}

} // namespace detail

// Rewire every labeled move across the silent closures: whoever silently
// reaches its source may take it, landing anywhere silently reachable from its
// target. Keeps the state set, grows the initial set by closure.
inline Vpa removeEpsilonMoves(const Vpa& a) {
    auto reach = detail::epsilonReach(a);
    detail::TransitionIndex index(a.transitions);
    Vpa out = a;
    out.initial.clear();
    out.transitions.clear();
    for (const auto& s : a.initial)
        out.initial.insert(reach.at(s).begin(), reach.at(s).end());
    for (const auto& r : a.states)
        for (const auto& s : reach.at(r))
            for (const auto& t : index.from(s)) {
                if (t.label == kEps) continue;
                for (const auto& p : reach.at(t.to))
                    out.transitions.insert({r, t.label, t.stack, p});
            }
    return out;
}

// Determinism-preserving elimination in two phases: collapse silent cycles
// into their least member, then splice the remaining silent edges starting
// from edges whose target has none. In a deterministic machine a state with a
// silent move has no other move, which is what makes the splices safe.
inline Vpa removeEpsilonMovesDeterministic(const Vpa& a) {
    std::string why;
    if (!isDeterministic(a, &why))
        throw Error("removeEpsilonMovesDeterministic: input is not deterministic (" + why + ")");

    Vpa cur = a;
    for (const auto& cycle : detail::epsilonCycles(cur)) {
        const std::string rep = *cycle.begin();
        std::set<Transition> kept;
        for (const auto& t : cur.transitions) {
            const bool fromIn = cycle.count(t.from) != 0;
            const bool toIn = cycle.count(t.to) != 0;
            if (t.label == kEps && fromIn && toIn) continue;
            Transition u = t;
            if (fromIn) u.from = rep;
            if (toIn) u.to = rep;
            kept.insert(u);
        }
        cur.transitions = std::move(kept);
        bool hadFinal = false, hadInitial = false;
        for (const auto& s : cycle) {
            hadFinal = hadFinal || cur.finals.count(s);
            hadInitial = hadInitial || cur.initial.count(s);
            if (s != rep) {
                cur.states.erase(s);
                cur.finals.erase(s);
                cur.initial.erase(s);
            }
        }
        if (hadFinal) cur.finals.insert(rep);
        if (hadInitial) cur.initial = {rep};
    }

    while (true) {
        std::set<std::string> hasSilentOut;
        for (const auto& t : cur.transitions)
            if (t.label == kEps) hasSilentOut.insert(t.from);
        std::optional<Transition> pick;
        for (const auto& t : cur.transitions)
            if (t.label == kEps && !hasSilentOut.count(t.to)) {
                pick = t;
                break;
            }
        if (!pick) break;
        const std::string p = pick->from, q = pick->to;
        cur.transitions.erase(*pick);
        std::vector<Transition> fromQ;
        for (const auto& t : cur.transitions)
            if (t.from == q) fromQ.push_back(t);
        for (const auto& t : fromQ) cur.transitions.insert({p, t.label, t.stack, t.to});
        const bool pWasFinal = cur.finals.count(p) != 0;
        if (cur.initial.count(p) && !pWasFinal) cur.initial = {q};
        if (cur.finals.count(q)) cur.finals.insert(p);
    }
    return cur;
}

} // namespace vpconf
