// vpts.hpp -- visibly pushdown transition systems, trace semantics, VPA induction.
#pragma once

#include <algorithm>
#include <deque>

#include "vpa.hpp"

namespace vpconf {

// Same transition shape as a Vpa; the silent label is kTau and there are no
// final states. Trace semantics collects every reachable label sequence.
struct Vpts {
    PartitionedAlphabet alphabet;
    std::set<std::string> states;
    std::set<std::string> initial;
    std::set<std::string> stackAlphabet;
    std::set<Transition> transitions;
};

struct Iovpts {
    Vpts underlying;
    std::set<std::string> inputs;
    std::set<std::string> outputs;
};

inline Vpa inducedVpa(const Vpts& v) {
    Vpa a{v.alphabet, v.states, v.initial, v.stackAlphabet, {}, v.states};
    for (Transition t : v.transitions) {
        if (t.label == kTau) t.label = kEps;
        a.transitions.insert(t);
    }
    return a;
}

// Defined only when every state is final. Silent self-loops on the automaton
// side are dropped: they change no trace and a transition system may not carry
// them.
inline Vpts inducedVpts(const Vpa& a) {
    if (a.finals != a.states)
        throw Error("inducedVpts: defined only when all states are final");
    Vpts v{a.alphabet, a.states, a.initial, a.stackAlphabet, {}};
    for (Transition t : a.transitions) {
        if (t.label == kEps) {
            if (t.from == t.to) continue;
            t.label = kTau;
        }
        v.transitions.insert(t);
    }
    return v;
}

namespace detail {

// bounded configuration sweep used by validation; depth-capped, and states
// already seen stop the walk early
inline std::set<std::string> reachableStates(const Vpts& v, std::size_t stackCap) {
    std::set<std::string> seen;
    TransitionIndex index(v.transitions);
    std::set<Configuration> visited;
    std::deque<Configuration> queue;
    for (const auto& s : v.initial) {
        Configuration c{s, {}};
        if (visited.insert(c).second) queue.push_back(c);
    }
    while (!queue.empty() && seen.size() < v.states.size()) {
        Configuration c = queue.front();
        queue.pop_front();
        seen.insert(c.state);
        for (const auto& t : index.from(c.state)) {
            auto next = applyMove(v.alphabet, c, t);
            if (!next || next->stack.size() > stackCap) continue;
            if (visited.insert(*next).second) queue.push_back(*next);
        }
    }
    return seen;
}

} // namespace detail

inline std::vector<std::string> validate(const Vpts& v) {
    std::vector<std::string> out = validateAlphabet(v.alphabet);
    for (const auto& s : v.initial)
        if (!v.states.count(s)) out.push_back("initial state '" + s + "' is not a state");
    for (const auto& z : v.stackAlphabet)
        if (isReserved(z)) out.push_back("stack symbol '" + z + "' is reserved");
    for (const auto& t : v.transitions) {
        const std::string at = "transition " + describe(t) + ": ";
        if (!v.states.count(t.from)) out.push_back(at + "unknown source state");
        if (!v.states.count(t.to)) out.push_back(at + "unknown target state");
        if (t.label == kEps) {
            out.push_back(at + "label _EPS_ belongs to automata, not transition systems");
            continue;
        }
        if (t.label != kTau && !v.alphabet.contains(t.label)) {
            out.push_back(at + "label is not in the alphabet");
            continue;
        }
        switch (kindOfLabel(v.alphabet, t.label)) {
        case Kind::Push:
            if (!v.stackAlphabet.count(t.stack))
                out.push_back(at + "push needs a stack-alphabet symbol");
            break;
        case Kind::Pop:
            if (t.stack != kBottom && !v.stackAlphabet.count(t.stack))
                out.push_back(at + "pop needs a stack-alphabet symbol or _BOTTOM_");
            break;
        case Kind::Simple:
        case Kind::Silent:
            if (t.stack != kAny)
                out.push_back(at + "simple moves must carry the _ANY_ placeholder");
            if (t.label == kTau && t.from == t.to)
                out.push_back(at + "silent self-loop");
            break;
        }
    }
    if (out.empty()) {
        // every state must be reachable from an initial configuration; the sweep
        // is depth-capped, so huge stacks cannot hang validation
        std::size_t cap = v.states.size() * v.stackAlphabet.size() + 1;
        std::set<std::string> seen = detail::reachableStates(v, cap);
        for (const auto& s : v.states)
            if (!seen.count(s)) out.push_back("state '" + s + "' unreachable from the initial states");
    }
    return out;
}

inline std::vector<std::string> validate(const Iovpts& io) {
    std::vector<std::string> out = validate(io.underlying);
    for (const auto& s : io.inputs)
        if (io.outputs.count(s)) out.push_back("io: symbol '" + s + "' is both input and output");
    std::set<std::string> both(io.inputs.begin(), io.inputs.end());
    both.insert(io.outputs.begin(), io.outputs.end());
    if (both != io.underlying.alphabet.allSymbols())
        out.push_back("io: inputs and outputs together must cover exactly the alphabet");
    return out;
}

// observable traces: silent moves are closed over and never show up
inline std::set<Word> observableTraces(const Vpts& v, std::size_t maxLen) {
    std::set<Word> traces;
    detail::TransitionIndex index(v.transitions);
    std::set<Configuration> start = detail::initialConfigs(v.initial);
    detail::silentClosure(v.alphabet, index, kTau, start);
    const std::set<std::string> symbols = v.alphabet.allSymbols();
    std::vector<std::pair<Word, std::set<Configuration>>> work;
    work.emplace_back(Word{}, std::move(start));
    while (!work.empty()) {
        auto [word, configs] = std::move(work.back());
        work.pop_back();
        traces.insert(word);
        if (word.size() == maxLen) continue;
        for (const auto& s : symbols) {
            std::set<Configuration> next = detail::stepAll(v.alphabet, index, configs, s);
            if (next.empty()) continue;
            detail::silentClosure(v.alphabet, index, kTau, next);
            Word w = word;
            w.push_back(s);
            work.emplace_back(std::move(w), std::move(next));
        }
    }
    return traces;
}

// raw traces: silent moves count as ordinary elements, spelled kTau
inline std::set<Word> traces(const Vpts& v, std::size_t maxLen) {
    std::set<Word> out;
    detail::TransitionIndex index(v.transitions);
    std::set<std::string> symbols = v.alphabet.allSymbols();
    symbols.insert(kTau);
    std::vector<std::pair<Word, std::set<Configuration>>> work;
    work.emplace_back(Word{}, detail::initialConfigs(v.initial));
    while (!work.empty()) {
        auto [word, configs] = std::move(work.back());
        work.pop_back();
        out.insert(word);
        if (word.size() == maxLen) continue;
        for (const auto& s : symbols) {
            std::set<Configuration> next = detail::stepAll(v.alphabet, index, configs, s);
            if (next.empty()) continue;
            Word w = word;
            w.push_back(s);
            work.emplace_back(std::move(w), std::move(next));
        }
    }
    return out;
}

// Syntactic sufficient check: no silent moves at all, at most one initial
// state, and the induced automaton is deterministic. A refusal can be
// conservative for systems with silent moves.
inline bool isDeterministicVpts(const Vpts& v, std::string* violation = nullptr) {
    for (const auto& t : v.transitions)
        if (t.label == kTau) {
            if (violation) *violation = "silent move present: " + describe(t);
            return false;
        }
    return isDeterministic(inducedVpa(v), violation);
}

} // namespace vpconf
