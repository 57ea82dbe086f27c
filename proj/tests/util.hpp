// util.hpp -- small helpers shared by the test suites.
#pragma once

#include <deque>
#include <map>
#include <string>

#include <vpconf/grammar.hpp>
#include <vpconf/vpa.hpp>
#include <vpconf/vpts.hpp>

namespace tu {

using vpconf::Vpa;
using vpconf::Vpts;
using vpconf::Word;

// every test machine uses single-character symbols, so words read as strings
inline Word w(const std::string& s) {
    Word out;
    for (char c : s) out.push_back(std::string(1, c));
    return out;
}

inline std::string str(const Word& word) {
    std::string out;
    for (const auto& s : word) out += s;
    return out.empty() ? "<empty>" : out;
}

inline std::vector<Word> allWords(const std::set<std::string>& symbols, std::size_t maxLen) {
    std::vector<Word> out{{}};
    std::size_t levelBegin = 0;
    for (std::size_t len = 1; len <= maxLen; ++len) {
        std::size_t levelEnd = out.size();
        for (std::size_t i = levelBegin; i < levelEnd; ++i)
            for (const auto& s : symbols) {
                Word next = out[i];
                next.push_back(s);
                out.push_back(std::move(next));
            }
        levelBegin = levelEnd;
    }
    return out;
}

inline std::string renamed(const std::map<std::string, std::string>& m, const std::string& s) {
    auto it = m.find(s);
    return it == m.end() ? s : it->second;
}

// replay a claimed evidence word and confirm the pop it vouches for is enabled
// afterwards: right source state, right top of stack (or drained for kBottom)
inline bool evidenceEnablesPop(const Vpts& v, const Word& word, const vpconf::Transition& pop) {
    vpconf::detail::TransitionIndex index(v.transitions);
    std::set<vpconf::Configuration> configs = vpconf::detail::initialConfigs(v.initial);
    vpconf::detail::silentClosure(v.alphabet, index, vpconf::kTau, configs);
    for (const auto& s : word) {
        configs = vpconf::detail::stepAll(v.alphabet, index, configs, s);
        if (configs.empty()) return false;
        vpconf::detail::silentClosure(v.alphabet, index, vpconf::kTau, configs);
    }
    return std::any_of(configs.begin(), configs.end(), [&](const vpconf::Configuration& c) {
        if (c.state != pop.from) return false;
        if (pop.stack == vpconf::kBottom) return c.stack.empty();
        return !c.stack.empty() && c.stack.back() == pop.stack;
    });
}

// Sentential-form walk, independent of the weighted engine: expand the
// leftmost nonterminal in every possible way and collect the words spelled so
// far. Silent terminals extend the form without extending the word. The walk
// is exhaustive up to maxLen, so the result is the full prefix language the
// grammar derives.
inline std::set<Word> derivedPrefixes(const vpconf::TraceGrammar& g, std::size_t maxLen) {
    using vpconf::Nonterminal;
    using vpconf::Production;
    std::map<Nonterminal, std::vector<const Production*>> byLhs;
    for (const auto& p : g.productions) byLhs[p.lhs].push_back(&p);
    using Form = std::pair<Word, std::vector<Nonterminal>>;
    std::set<Form> seen;
    std::deque<Form> queue;
    for (const auto& s : g.start)
        if (seen.insert({{}, {s}}).second) queue.push_back({{}, {s}});
    std::set<Word> words;
    while (!queue.empty()) {
        auto [word, stack] = std::move(queue.front());
        queue.pop_front();
        words.insert(word);
        if (stack.empty()) continue;
        auto it = byLhs.find(stack.front());
        if (it == byLhs.end()) continue;
        for (const Production* p : it->second) {
            Word next = word;
            if (p->terminal.label != vpconf::kTau && p->terminal.label != vpconf::kEps)
                next.push_back(p->terminal.label);
            if (next.size() > maxLen) continue;
            std::vector<Nonterminal> rest(p->rhs.begin(), p->rhs.end());
            rest.insert(rest.end(), stack.begin() + 1, stack.end());
            Form f{std::move(next), std::move(rest)};
            if (seen.insert(f).second) queue.push_back(std::move(f));
        }
    }
    return words;
}

inline Vpa renameStates(const Vpa& a, const std::map<std::string, std::string>& m) {
    Vpa out = a;
    out.states.clear();
    out.initial.clear();
    out.finals.clear();
    out.transitions.clear();
    for (const auto& s : a.states) out.states.insert(renamed(m, s));
    for (const auto& s : a.initial) out.initial.insert(renamed(m, s));
    for (const auto& s : a.finals) out.finals.insert(renamed(m, s));
    for (const auto& t : a.transitions)
        out.transitions.insert({renamed(m, t.from), t.label, t.stack, renamed(m, t.to)});
    return out;
}

} // namespace tu
