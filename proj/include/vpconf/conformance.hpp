// conformance.hpp -- fault model T = (D ∩ comp-otr(S)) ∪ (F ∩ otr(S)), emptiness
// with shortest witness, and the visible-conformance verdict.
#pragma once

#include <optional>

#include "algebra.hpp"
#include "contract.hpp"
#include "enumerate.hpp"
#include "grammar.hpp"
#include "vpts.hpp"

namespace vpconf {

// EMPTY when the language is empty, otherwise the shortest accepted word,
// ties broken lexicographically. Decided on the trace grammar: leftmost
// sentential prefixes are exactly the runs, and acceptance tolerates any
// residual stack, so the language is nonempty precisely when some final state
// is reachable as the leftmost nonterminal's state.
struct EmptinessResult {
    std::optional<Word> witness;
    bool empty() const { return !witness.has_value(); }
};

inline EmptinessResult isEmptyWithWitness(const Vpa& a) {
    detail::GrammarAnalysis g(a.alphabet, a.states, a.initial, a.transitions);
    const detail::BestWord* best = nullptr;
    for (const auto& f : a.finals) {
        const detail::BestWord& r = g.reach(f);
        if (!r.known()) continue;
        if (!best || detail::shortlexImproves(*best, r.len, r.word)) best = &r;
    }
    if (!best) return {};
    return {best->word};
}

enum class Clause { DesiredMissing, ForbiddenPresent };

struct Verdict {
    bool pass = false;
    std::optional<Word> witness;
    std::optional<Clause> clause;
    std::size_t suiteStates = 0;
    std::size_t bound = 0;
};

struct FaultModel {
    Vpa suite;                 // deterministic, non-blocking, silent-free
    std::size_t specStates = 0; // states of the contracted specification
    std::size_t dStates = 0;
    std::size_t fStates = 0;
    std::size_t bound = 0;     // (nS*nF + 1) * (nS*nD + nD + 1)
};

namespace detail {

struct FaultModelParts {
    FaultModel model;
    Vpa specOtr;        // A1: the contracted specification's traces as a VPA
    Vpa specComplement; // B1
    Vpa forbiddenHit;   // A2 = F ∩ otr(S)
    Vpa desiredMiss;    // B2 = D ∩ comp-otr(S)
};

inline void requireConformanceInputs(const Iovpts& spec, const Vpa& dAut, const Vpa& fAut) {
    std::string why;
    if (!isDeterministicVpts(spec.underlying, &why))
        throw Error("buildFaultModel: the specification is not deterministic (" + why + ")");
    if (!isDeterministic(dAut, &why))
        throw Error("buildFaultModel: the desired-language automaton is not deterministic (" + why + ")");
    if (!isDeterministic(fAut, &why))
        throw Error("buildFaultModel: the forbidden-language automaton is not deterministic (" + why + ")");
    requireSameAlphabet("buildFaultModel(spec, desired)", spec.underlying.alphabet, dAut.alphabet);
    requireSameAlphabet("buildFaultModel(spec, forbidden)", spec.underlying.alphabet, fAut.alphabet);
}

inline FaultModelParts buildFaultModelParts(const Iovpts& spec, const Vpa& dAut, const Vpa& fAut) {
    requireConformanceInputs(spec, dAut, fAut);
    FaultModelParts parts;
    const Vpts contracted = contract(spec.underlying);
    parts.specOtr = inducedVpa(contracted);
    parts.specComplement = complement(parts.specOtr);
    parts.forbiddenHit = intersect(fAut, parts.specOtr);
    parts.desiredMiss = intersect(dAut, parts.specComplement);
    parts.model.suite = unite(parts.forbiddenHit, parts.desiredMiss);
    parts.model.specStates = contracted.states.size();
    parts.model.dStates = dAut.states.size();
    parts.model.fStates = fAut.states.size();
    parts.model.bound = (parts.model.specStates * parts.model.fStates + 1) *
                        (parts.model.specStates * parts.model.dStates + parts.model.dStates + 1);
    return parts;
}

} // namespace detail

inline FaultModel buildFaultModel(const Iovpts& spec, const Vpa& dAut, const Vpa& fAut) {
    return detail::buildFaultModelParts(spec, dAut, fAut).model;
}

// PASS iff otr(IUT) ∩ L(suite) = ∅. On FAIL the witness is the shortest such
// word; the clause says which conformance demand it violates, checking the
// desired side first when both hold.
inline Verdict checkConformance(const Vpts& iut, const Iovpts& spec, const Vpa& dAut,
                                const Vpa& fAut) {
    std::string why;
    if (!isDeterministicVpts(iut, &why))
        throw Error("checkConformance: the implementation is not deterministic (" + why + ")");
    detail::requireSameAlphabet("checkConformance(iut, spec)", iut.alphabet,
                                spec.underlying.alphabet);
    detail::FaultModelParts parts = detail::buildFaultModelParts(spec, dAut, fAut);

    const Vpa iutOtr = inducedVpa(contract(iut));
    const Vpa overlap = intersect(iutOtr, parts.model.suite);
    const EmptinessResult e = isEmptyWithWitness(overlap);

    Verdict v;
    v.suiteStates = parts.model.suite.states.size();
    v.bound = parts.model.bound;
    if (e.empty()) {
        v.pass = true;
        return v;
    }
    v.pass = false;
    v.witness = e.witness;
    const bool desiredSide = accepts(dAut, *e.witness) && accepts(parts.specComplement, *e.witness);
    v.clause = desiredSide ? Clause::DesiredMissing : Clause::ForbiddenPresent;
    return v;
}

// bounded adherence probe: no word of otr(iut) up to maxLen lies in the suite
inline bool passesSuite(const Vpts& iut, const Vpa& suite, std::size_t maxLen) {
    for (const auto& word : enumerateOtr(iut, maxLen).words)
        if (accepts(suite, word)) return false;
    return true;
}

} // namespace vpconf
