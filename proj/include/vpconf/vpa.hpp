// vpa.hpp -- visibly pushdown automata: model, moves, membership, determinism.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alphabet.hpp"

namespace vpconf {

struct Transition {
    std::string from;
    std::string label;
    std::string stack; // pushed symbol, popped symbol or kBottom, or kAny
    std::string to;

    auto operator<=>(const Transition&) const = default;
};

// the stack grows towards the back; kBottom itself is never stored
struct Configuration {
    std::string state;
    std::vector<std::string> stack;

    auto operator<=>(const Configuration&) const = default;
};

struct Vpa {
    PartitionedAlphabet alphabet;
    std::set<std::string> states;
    std::set<std::string> initial;
    std::set<std::string> stackAlphabet;
    std::set<Transition> transitions;
    std::set<std::string> finals;
};

inline Kind transitionKind(const PartitionedAlphabet& alphabet, const Transition& t) {
    return kindOfLabel(alphabet, t.label);
}

inline std::string describe(const Transition& t) {
    return "(" + t.from + ", " + t.label + ", " + t.stack + ", " + t.to + ")";
}

inline std::vector<std::string> validate(const Vpa& a) {
    std::vector<std::string> out = validateAlphabet(a.alphabet);
    for (const auto& s : a.initial)
        if (!a.states.count(s)) out.push_back("initial state '" + s + "' is not a state");
    for (const auto& s : a.finals)
        if (!a.states.count(s)) out.push_back("final state '" + s + "' is not a state");
    for (const auto& z : a.stackAlphabet)
        if (isReserved(z)) out.push_back("stack symbol '" + z + "' is reserved");
    for (const auto& t : a.transitions) {
        const std::string at = "transition " + describe(t) + ": ";
        if (!a.states.count(t.from)) out.push_back(at + "unknown source state");
        if (!a.states.count(t.to)) out.push_back(at + "unknown target state");
        if (t.label == kTau) {
            out.push_back(at + "label _TAU_ belongs to transition systems, not automata");
            continue;
        }
        if (t.label != kEps && !a.alphabet.contains(t.label)) {
            out.push_back(at + "label is not in the alphabet");
            continue;
        }
        switch (kindOfLabel(a.alphabet, t.label)) {
        case Kind::Push:
            if (!a.stackAlphabet.count(t.stack))
                out.push_back(at + "push needs a stack-alphabet symbol");
            break;
        case Kind::Pop:
            if (t.stack != kBottom && !a.stackAlphabet.count(t.stack))
                out.push_back(at + "pop needs a stack-alphabet symbol or _BOTTOM_");
            break;
        case Kind::Simple:
        case Kind::Silent:
            if (t.stack != kAny)
                out.push_back(at + "simple moves must carry the _ANY_ placeholder");
            break;
        }
    }
    return out;
}

// One move. Preconditions follow the move semantics: a pop on a stack symbol
// needs that symbol on top, a pop on kBottom needs the empty stack and keeps it.
inline Configuration step(const Vpa& a, const Configuration& c, const Transition& t) {
    if (t.from != c.state)
        throw Error("step: transition " + describe(t) + " does not start in state " + c.state);
    Configuration next{t.to, c.stack};
    switch (transitionKind(a.alphabet, t)) {
    case Kind::Push:
        next.stack.push_back(t.stack);
        return next;
    case Kind::Pop:
        if (t.stack == kBottom) {
            if (!c.stack.empty())
                throw Error("step: transition " + describe(t) + " pops on _BOTTOM_ but the stack is not empty");
            return next;
        }
        if (c.stack.empty() || c.stack.back() != t.stack)
            throw Error("step: transition " + describe(t) + " pops '" + t.stack + "' which is not on top");
        next.stack.pop_back();
        return next;
    case Kind::Simple:
    case Kind::Silent:
        return next;
    }
    throw Error("step: unreachable");
}

namespace detail {

// per-call successor index; automata are tiny, rebuilding is cheap
struct TransitionIndex {
    std::map<std::string, std::vector<Transition>> bySource;

    explicit TransitionIndex(const std::set<Transition>& transitions) {
        for (const auto& t : transitions) bySource[t.from].push_back(t);
    }

    const std::vector<Transition>& from(const std::string& state) const {
        static const std::vector<Transition> none;
        auto it = bySource.find(state);
        return it == bySource.end() ? none : it->second;
    }
};

// move application without the precondition ceremony; nullopt when inapplicable
inline std::optional<Configuration> applyMove(const PartitionedAlphabet& alphabet,
                                              const Configuration& c, const Transition& t) {
    Configuration next{t.to, c.stack};
    switch (kindOfLabel(alphabet, t.label)) {
    case Kind::Push:
        next.stack.push_back(t.stack);
        return next;
    case Kind::Pop:
        if (t.stack == kBottom) {
            if (!c.stack.empty()) return std::nullopt;
            return next;
        }
        if (c.stack.empty() || c.stack.back() != t.stack) return std::nullopt;
        next.stack.pop_back();
        return next;
    case Kind::Simple:
    case Kind::Silent:
        return next;
    }
    return std::nullopt;
}

inline void silentClosure(const PartitionedAlphabet& alphabet, const TransitionIndex& index,
                          const std::string& silentLabel, std::set<Configuration>& configs) {
    std::vector<Configuration> work(configs.begin(), configs.end());
    while (!work.empty()) {
        Configuration c = work.back();
        work.pop_back();
        for (const auto& t : index.from(c.state)) {
            if (t.label != silentLabel) continue;
            auto next = applyMove(alphabet, c, t);
            if (next && configs.insert(*next).second) work.push_back(*next);
        }
    }
}

inline std::set<Configuration> stepAll(const PartitionedAlphabet& alphabet,
                                       const TransitionIndex& index,
                                       const std::set<Configuration>& configs,
                                       const std::string& symbol) {
    std::set<Configuration> next;
    for (const auto& c : configs)
        for (const auto& t : index.from(c.state)) {
            if (t.label != symbol) continue;
            auto n = applyMove(alphabet, c, t);
            if (n) next.insert(*n);
        }
    return next;
}

inline std::set<Configuration> initialConfigs(const std::set<std::string>& initial) {
    std::set<Configuration> configs;
    for (const auto& s : initial) configs.insert({s, {}});
    return configs;
}

} // namespace detail

inline bool accepts(const Vpa& a, const Word& word) {
    for (const auto& symbol : word)
        if (!a.alphabet.contains(symbol))
            throw Error("accepts: symbol '" + symbol + "' is not in the alphabet");
    detail::TransitionIndex index(a.transitions);
    std::set<Configuration> configs = detail::initialConfigs(a.initial);
    detail::silentClosure(a.alphabet, index, kEps, configs);
    for (const auto& symbol : word) {
        configs = detail::stepAll(a.alphabet, index, configs, symbol);
        if (configs.empty()) return false;
        detail::silentClosure(a.alphabet, index, kEps, configs);
    }
    for (const auto& c : configs)
        if (a.finals.count(c.state)) return true;
    return false;
}

// Conditions: (1) one push per source+label, (2) one target per source+label+stack
// for pops and simple moves (silent moves included), (3) silent moves do not share
// a source with labeled moves. At most one initial state.
inline bool isDeterministic(const Vpa& a, std::string* violation = nullptr) {
    auto report = [&](const std::string& why) {
        if (violation) *violation = why;
        return false;
    };
    if (a.initial.size() > 1)
        return report("more than one initial state");
    std::map<std::pair<std::string, std::string>, Transition> pushSeen;
    std::map<std::tuple<std::string, std::string, std::string>, Transition> popSimpleSeen;
    std::set<std::string> silentSource, labeledSource;
    for (const auto& t : a.transitions) {
        switch (transitionKind(a.alphabet, t)) {
        case Kind::Push: {
            auto [it, fresh] = pushSeen.try_emplace({t.from, t.label}, t);
            if (!fresh && (it->second.stack != t.stack || it->second.to != t.to))
                return report("push conflict: " + describe(it->second) + " vs " + describe(t));
            labeledSource.insert(t.from);
            break;
        }
        case Kind::Pop:
        case Kind::Simple:
        case Kind::Silent: {
            auto [it, fresh] = popSimpleSeen.try_emplace({t.from, t.label, t.stack}, t);
            if (!fresh && it->second.to != t.to)
                return report("target conflict: " + describe(it->second) + " vs " + describe(t));
            (t.label == kEps ? silentSource : labeledSource).insert(t.from);
            break;
        }
        }
    }
    for (const auto& s : silentSource)
        if (labeledSource.count(s))
            return report("state '" + s + "' mixes a silent move with labeled moves");
    if (violation) violation->clear();
    return true;
}

inline bool hasEpsilonMoves(const Vpa& a) {
    for (const auto& t : a.transitions)
        if (t.label == kEps) return true;
    return false;
}

} // namespace vpconf
