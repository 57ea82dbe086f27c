// enumerate.hpp -- bounded brute-force enumeration, the ground truth the tests trust.
#pragma once

#include <algorithm>
#include <utility>

#include "vpa.hpp"
#include "vpts.hpp"

namespace vpconf {

struct BoundedLanguage {
    std::set<Word> words;
    std::size_t bound = 0;
    std::string source;

    bool contains(const Word& w) const { return words.count(w) != 0; }
};

// Exhaustive walk of the word tree, carrying the set of configurations reached
// after each prefix. Stacks never grow past the prefix length, so the walk is
// finite without any extra bound.
inline BoundedLanguage enumerateVpa(const Vpa& a, std::size_t maxLen, std::string source = "") {
    BoundedLanguage lang{{}, maxLen, std::move(source)};
    detail::TransitionIndex index(a.transitions);
    std::set<Configuration> start = detail::initialConfigs(a.initial);
    detail::silentClosure(a.alphabet, index, kEps, start);
    const std::set<std::string> symbols = a.alphabet.allSymbols();
    std::vector<std::pair<Word, std::set<Configuration>>> work;
    work.emplace_back(Word{}, std::move(start));
    while (!work.empty()) {
        auto [word, configs] = std::move(work.back());
        work.pop_back();
        bool accepted = std::any_of(configs.begin(), configs.end(), [&](const Configuration& c) {
            return a.finals.count(c.state) != 0;
        });
        if (accepted) lang.words.insert(word);
        if (word.size() == maxLen) continue;
        for (const auto& s : symbols) {
            std::set<Configuration> next = detail::stepAll(a.alphabet, index, configs, s);
            if (next.empty()) continue;
            detail::silentClosure(a.alphabet, index, kEps, next);
            Word w = word;
            w.push_back(s);
            work.emplace_back(std::move(w), std::move(next));
        }
    }
    return lang;
}

// Same walk over transition-system semantics; every prefix of a trace is a
// trace, so every visited node is collected.
inline BoundedLanguage enumerateOtr(const Vpts& v, std::size_t maxLen, std::string source = "") {
    BoundedLanguage lang{{}, maxLen, std::move(source)};
    for (const auto& w : observableTraces(v, maxLen)) lang.words.insert(w);
    return lang;
}

} // namespace vpconf
