// fixtures.hpp -- the worked machines every suite leans on, built in code.
#pragma once

#include <vpconf/vpa.hpp>
#include <vpconf/vpts.hpp>

namespace fx {

using namespace vpconf;

// a^n b^n acceptor; B marks the outermost call so the last pop can see it
inline Vpa anbn() {
    Vpa a;
    a.alphabet.calls = {"a"};
    a.alphabet.returns = {"b"};
    a.states = {"s0", "s1", "s2", "sf"};
    a.initial = {"s0"};
    a.stackAlphabet = {"A", "B"};
    a.finals = {"s0", "sf"};
    a.transitions = {
        {"s0", "a", "B", "s1"}, {"s1", "a", "A", "s1"},
        {"s1", "b", "A", "s2"}, {"s1", "b", "B", "sf"},
        {"s2", "b", "A", "s2"}, {"s2", "b", "B", "sf"},
    };
    return a;
}

// same machine, but only the pop-exhausted state accepts (drops the n=0 case)
inline Vpa anbnStrict() {
    Vpa a = anbn();
    a.finals = {"sf"};
    return a;
}

// one state, push a / pop b on the empty stack; accepts exactly the words
// whose b's never face a pushed symbol
inline Vpa popBottom() {
    Vpa a;
    a.alphabet.calls = {"a"};
    a.alphabet.returns = {"b"};
    a.states = {"u"};
    a.initial = {"u"};
    a.stackAlphabet = {"Z"};
    a.finals = {"u"};
    a.transitions = {{"u", "a", "Z", "u"}, {"u", "b", kBottom, "u"}};
    return a;
}

// p reaches q silently, q reads one call; accepts "a" only
inline Vpa epsChain() {
    Vpa a;
    a.alphabet.calls = {"a"};
    a.states = {"p", "q", "r"};
    a.initial = {"p"};
    a.stackAlphabet = {"Z"};
    a.finals = {"r"};
    a.transitions = {{"p", kEps, kAny, "q"}, {"q", "a", "Z", "r"}};
    return a;
}

// coin pushes, coffee/tea pop, a silent reset rearms the machine
inline Vpts beverageMachine() {
    Vpts v;
    v.alphabet.calls = {"b"};
    v.alphabet.returns = {"c", "t"};
    v.states = {"s0", "s1"};
    v.initial = {"s0"};
    v.stackAlphabet = {"Z"};
    v.transitions = {
        {"s0", "b", "Z", "s0"},
        {"s0", "c", "Z", "s1"}, {"s0", "t", "Z", "s1"},
        {"s1", "c", "Z", "s1"}, {"s1", "t", "Z", "s1"},
        {"s1", kTau, kAny, "s0"},
    };
    return v;
}

inline PartitionedAlphabet sessionAlphabet() {
    PartitionedAlphabet l;
    l.calls = {"a"};
    l.returns = {"b", "x"};
    return l;
}

// the specification: a opens a frame, b closes one, x closes one and commits
inline Iovpts specMachine() {
    Iovpts io;
    io.inputs = {"a", "b"};
    io.outputs = {"x"};
    Vpts& v = io.underlying;
    v.alphabet = sessionAlphabet();
    v.states = {"s0", "s1", "s2"};
    v.initial = {"s0"};
    v.stackAlphabet = {"A"};
    v.transitions = {
        {"s0", "a", "A", "s0"}, {"s1", "a", "A", "s1"}, {"s2", "a", "A", "s0"},
        {"s0", "b", "A", "s1"}, {"s1", "b", "A", "s2"}, {"s2", "b", "A", "s1"},
        {"s0", "x", "A", "s2"},
    };
    return io;
}

// implementation with one extra behavior: x also fires on the drained stack
inline Iovpts faultyIut() {
    Iovpts io;
    io.inputs = {"a", "b"};
    io.outputs = {"x"};
    Vpts& v = io.underlying;
    v.alphabet = sessionAlphabet();
    v.states = {"q0", "q1", "q2"};
    v.initial = {"q0"};
    v.stackAlphabet = {"A"};
    v.transitions = {
        {"q0", "a", "A", "q0"}, {"q1", "a", "A", "q1"}, {"q2", "a", "A", "q0"},
        {"q0", "b", "A", "q1"}, {"q1", "b", "A", "q2"}, {"q2", "b", "A", "q1"},
        {"q0", "x", "A", "q2"},
        {"q2", "x", kBottom, "q1"},
    };
    return io;
}

// implementation isomorphic to the specification
inline Iovpts passingIut() {
    Iovpts io = faultyIut();
    io.underlying.transitions.erase({"q2", "x", kBottom, "q1"});
    return io;
}

// desired behaviors D = { a^n b^n x : n >= 1 }
inline Vpa desiredAut() {
    Vpa a;
    a.alphabet = sessionAlphabet();
    a.states = {"d0", "d1", "d2"};
    a.initial = {"d0"};
    a.stackAlphabet = {"A"};
    a.finals = {"d2"};
    a.transitions = {
        {"d0", "a", "A", "d0"},
        {"d0", "b", "A", "d1"}, {"d1", "b", "A", "d1"},
        {"d1", "x", kBottom, "d2"},
    };
    return a;
}

// forbidden behaviors F = { a+ x }
inline Vpa forbiddenAx() {
    Vpa a;
    a.alphabet = sessionAlphabet();
    a.states = {"f0", "f1", "f2"};
    a.initial = {"f0"};
    a.stackAlphabet = {"A"};
    a.finals = {"f2"};
    a.transitions = {
        {"f0", "a", "A", "f1"}, {"f1", "a", "A", "f1"},
        {"f1", "x", "A", "f2"},
    };
    return a;
}

// forbidden behaviors F = { a^n b^(n+1) : n >= 0 }; the extra b pops on the
// empty stack, which is deterministic next to the pop on A (different symbols)
inline Vpa forbiddenExtraB() {
    Vpa a;
    a.alphabet = sessionAlphabet();
    a.states = {"f0", "f1", "f2"};
    a.initial = {"f0"};
    a.stackAlphabet = {"A"};
    a.finals = {"f2"};
    a.transitions = {
        {"f0", "a", "A", "f0"},
        {"f0", "b", "A", "f1"}, {"f1", "b", "A", "f1"},
        {"f0", "b", kBottom, "f2"}, {"f1", "b", kBottom, "f2"},
    };
    return a;
}

// accepts nothing, same alphabet as the session machines
inline Vpa emptyLang() {
    Vpa a;
    a.alphabet = sessionAlphabet();
    a.states = {"e0"};
    a.initial = {"e0"};
    a.stackAlphabet = {"A"};
    return a;
}

} // namespace fx
