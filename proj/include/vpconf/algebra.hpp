// algebra.hpp -- closure constructions: product, intersection, completion, union, complement.
#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "epsilon.hpp"
#include "vpa.hpp"

namespace vpconf {

namespace detail {

inline std::string pairName(const std::string& left, const std::string& right) {
    return "(" + left + "," + right + ")";
}

inline void requireSameAlphabet(const char* op, const PartitionedAlphabet& s,
                                const PartitionedAlphabet& q) {
    if (s == q) return;
    std::string diff;
    const auto ls = s.allSymbols();
    const auto rs = q.allSymbols();
    for (const auto& x : ls)
        if (!rs.count(x)) diff += (diff.empty() ? "" : ", ") + x;
    for (const auto& x : rs)
        if (!ls.count(x)) diff += (diff.empty() ? "" : ", ") + x;
    if (diff.empty()) diff = "same symbols, partitioned differently";
    throw Error(std::string(op) + ": operands use different alphabets (" + diff + ")");
}

// Raw synchronous product over the full Cartesian state set, finals paired.
// The name map lets callers rebuild the pairing (union needs its own finals).
struct ProductBuild {
    Vpa vpa;
    std::map<std::pair<std::string, std::string>, std::string> stateName;
};

inline ProductBuild productRaw(const Vpa& s, const Vpa& q) {
    ProductBuild b;
    b.vpa.alphabet = s.alphabet;

    std::set<std::string> taken;
    auto claim = [&taken](std::string n) {
        while (taken.count(n)) n += "'";
        taken.insert(n);
        return n;
    };
    for (const auto& x : s.states)
        for (const auto& y : q.states) {
            std::string n = claim(pairName(x, y));
            b.stateName[{x, y}] = n;
            b.vpa.states.insert(n);
        }

    taken.clear();
    std::map<std::pair<std::string, std::string>, std::string> stackName;
    for (const auto& z : s.stackAlphabet)
        for (const auto& v : q.stackAlphabet) {
            std::string n = claim(pairName(z, v));
            stackName[{z, v}] = n;
            b.vpa.stackAlphabet.insert(n);
        }

    for (const auto& x : s.initial)
        for (const auto& y : q.initial) b.vpa.initial.insert(b.stateName.at({x, y}));
    for (const auto& x : s.finals)
        for (const auto& y : q.finals) b.vpa.finals.insert(b.stateName.at({x, y}));

    // joint moves on a shared visible label
    for (const auto& ts : s.transitions) {
        if (ts.label == kEps) continue;
        for (const auto& tq : q.transitions) {
            if (tq.label != ts.label) continue;
            std::string stk;
            switch (kindOfLabel(s.alphabet, ts.label)) {
                case Kind::Push:
                    stk = stackName.at({ts.stack, tq.stack});
                    break;
                case Kind::Pop:
                    if (ts.stack == kBottom && tq.stack == kBottom) stk = kBottom;
                    else if (ts.stack != kBottom && tq.stack != kBottom)
                        stk = stackName.at({ts.stack, tq.stack});
                    else
                        continue; // one stack empty, the other not: no joint move
                    break;
                default:
                    stk = kAny;
                    break;
            }
            b.vpa.transitions.insert(
                {b.stateName.at({ts.from, tq.from}), ts.label, stk, b.stateName.at({ts.to, tq.to})});
        }
    }
    // one-sided silent moves, the other operand stays put
    for (const auto& ts : s.transitions)
        if (ts.label == kEps)
            for (const auto& y : q.states)
                b.vpa.transitions.insert(
                    {b.stateName.at({ts.from, y}), kEps, kAny, b.stateName.at({ts.to, y})});
    for (const auto& tq : q.transitions)
        if (tq.label == kEps)
            for (const auto& x : s.states)
                b.vpa.transitions.insert(
                    {b.stateName.at({x, tq.from}), kEps, kAny, b.stateName.at({x, tq.to})});
    return b;
}

} // namespace detail

// Drops states the transition graph cannot reach from the initial set. Graph
// reachability over-approximates configuration reachability, so the language
// is untouched.
inline Vpa prune(const Vpa& a) {
    std::map<std::string, std::vector<std::string>> succ;
    for (const auto& t : a.transitions) succ[t.from].push_back(t.to);
    std::set<std::string> keep(a.initial.begin(), a.initial.end());
    std::vector<std::string> work(a.initial.begin(), a.initial.end());
    while (!work.empty()) {
        std::string u = work.back();
        work.pop_back();
        auto it = succ.find(u);
        if (it == succ.end()) continue;
        for (const auto& v : it->second)
            if (keep.insert(v).second) work.push_back(v);
    }
    Vpa out;
    out.alphabet = a.alphabet;
    out.stackAlphabet = a.stackAlphabet;
    out.states = keep;
    out.initial = a.initial;
    for (const auto& f : a.finals)
        if (keep.count(f)) out.finals.insert(f);
    for (const auto& t : a.transitions)
        if (keep.count(t.from)) out.transitions.insert(t);
    return out;
}

// Synchronous product: both operands read the same word, stacks move in
// lockstep as pairs. Finals are paired, so L(product) = L(s) ∩ L(q). The state
// set is the full Cartesian product, unpruned.
inline Vpa product(const Vpa& s, const Vpa& q) {
    detail::requireSameAlphabet("product", s.alphabet, q.alphabet);
    return detail::productRaw(s, q).vpa;
}

inline Vpa intersect(const Vpa& s, const Vpa& q) {
    detail::requireSameAlphabet("intersect", s.alphabet, q.alphabet);
    return prune(detail::productRaw(s, q).vpa);
}

// Completes the move relation so every word has a run from every state, adding
// at most one non-final sink. States whose only moves are silent are left
// alone: completing them would break determinism, and runs leave them by the
// silent move anyway. Call completions push the least stack symbol, or a fresh
// "_Z0_" when the stack alphabet is empty.
inline Vpa makeNonBlocking(const Vpa& a) {
    std::set<std::pair<std::string, std::string>> pushKeys, simpleKeys;
    std::set<std::tuple<std::string, std::string, std::string>> popKeys;
    std::set<std::string> silentOut;
    for (const auto& t : a.transitions) {
        if (t.label == kEps) {
            silentOut.insert(t.from);
            continue;
        }
        switch (kindOfLabel(a.alphabet, t.label)) {
            case Kind::Push: pushKeys.insert({t.from, t.label}); break;
            case Kind::Pop: popKeys.insert({t.from, t.label, t.stack}); break;
            default: simpleKeys.insert({t.from, t.label}); break;
        }
    }

    std::string sink = "sink";
    while (a.states.count(sink)) sink += "_";
    const std::string zsym = a.stackAlphabet.empty() ? "_Z0_" : *a.stackAlphabet.begin();

    std::set<Transition> add;
    for (const auto& st : a.states) {
        if (silentOut.count(st)) continue;
        for (const auto& c : a.alphabet.calls)
            if (!pushKeys.count({st, c})) add.insert({st, c, zsym, sink});
        for (const auto& r : a.alphabet.returns) {
            for (const auto& z : a.stackAlphabet)
                if (!popKeys.count({st, r, z})) add.insert({st, r, z, sink});
            if (!popKeys.count({st, r, kBottom})) add.insert({st, r, kBottom, sink});
        }
        for (const auto& i : a.alphabet.internals)
            if (!simpleKeys.count({st, i})) add.insert({st, i, kAny, sink});
    }
    if (add.empty()) return a;

    Vpa out = a;
    out.states.insert(sink);
    if (out.stackAlphabet.empty() && !out.alphabet.calls.empty()) out.stackAlphabet.insert(zsym);
    for (const auto& c : out.alphabet.calls) add.insert({sink, c, zsym, sink});
    for (const auto& r : out.alphabet.returns) {
        for (const auto& z : out.stackAlphabet) add.insert({sink, r, z, sink});
        add.insert({sink, r, kBottom, sink});
    }
    for (const auto& i : out.alphabet.internals) add.insert({sink, i, kAny, sink});
    out.transitions.insert(add.begin(), add.end());
    return out;
}

namespace detail {

// Union and complement need an initial state to anchor runs; a machine without
// one gets a fresh rejecting start so completion can take over from there.
inline void ensureInitial(Vpa& a) {
    if (!a.initial.empty()) return;
    std::string fresh = "idle";
    while (a.states.count(fresh)) fresh += "_";
    a.states.insert(fresh);
    a.initial.insert(fresh);
}

inline Vpa silentFreeCopy(const Vpa& a) {
    if (!hasEpsilonMoves(a)) return a;
    return isDeterministic(a) ? removeEpsilonMovesDeterministic(a) : removeEpsilonMoves(a);
}

} // namespace detail

// L(s) ∪ L(q): complete both operands so neither can die mid-word, then pair
// them up and accept when either side would. Named unite because union is a
// reserved word.
inline Vpa unite(const Vpa& s, const Vpa& q) {
    detail::requireSameAlphabet("union", s.alphabet, q.alphabet);
    auto prep = [](const Vpa& a) {
        Vpa b = detail::silentFreeCopy(a);
        detail::ensureInitial(b);
        return makeNonBlocking(b);
    };
    const Vpa s2 = prep(s), q2 = prep(q);
    detail::ProductBuild built = detail::productRaw(s2, q2);
    built.vpa.finals.clear();
    for (const auto& x : s2.states)
        for (const auto& y : q2.states)
            if (s2.finals.count(x) || q2.finals.count(y))
                built.vpa.finals.insert(built.stateName.at({x, y}));
    return prune(built.vpa);
}

// A* − L(a) over the full partitioned alphabet, unbalanced words included.
// Needs a deterministic input: make the single run total, then flip finals.
inline Vpa complement(const Vpa& a) {
    std::string why;
    if (!isDeterministic(a, &why)) throw Error("complement: input must be deterministic (" + why + ")");
    Vpa b = removeEpsilonMovesDeterministic(a);
    detail::ensureInitial(b);
    Vpa c = makeNonBlocking(b);
    std::set<std::string> flipped;
    for (const auto& st : c.states)
        if (!c.finals.count(st)) flipped.insert(st);
    c.finals = std::move(flipped);
    return c;
}

} // namespace vpconf
