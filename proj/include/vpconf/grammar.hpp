// grammar.hpp -- the trace grammar: leftmost derivations spell exactly the traces.
//
// Nonterminal [s,Z,p] stands for the trace segments that start in state s with
// Z on top of the stack and finish by consuming that Z, landing in state p.
// The bottom marker variant [s,_BOTTOM_,-] never finishes. Each production is
// led by one transition, its terminal. Leftmost derivations then spell traces
// terminal by terminal, and the leftmost nonterminal always carries the state
// the machine is in, which is what every consumer here exploits:
// reachability, emptiness witnesses, and contraction all read off the grammar.
#pragma once

#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <tuple>

#include "vpa.hpp"
#include "vpts.hpp"

namespace vpconf {

struct Nonterminal {
    std::string state;
    std::string stackSym;              // element of Γ, or kBottom
    std::optional<std::string> cont;   // landing state; empty exactly when stackSym is kBottom
    auto operator<=>(const Nonterminal&) const = default;
};

struct Production {
    Nonterminal lhs;
    Transition terminal;
    std::vector<Nonterminal> rhs;      // 0 for a matched pop, 1 for simple moves, 2 for pushes
    auto operator<=>(const Production&) const = default;
};

struct TraceGrammar {
    std::vector<Nonterminal> start;    // [s0, kBottom, -] per initial state
    std::set<Nonterminal> nonterminals;
    std::vector<Production> productions;
};

namespace detail {

// Worklist materialization shared by the VPTS and VPA views. Grammar size is
// cubic in the state count, so callers that only need reachability use
// GrammarAnalysis below instead.
inline TraceGrammar buildGrammar(const PartitionedAlphabet& alphabet,
                                 const std::set<std::string>& states,
                                 const std::set<std::string>& initial,
                                 const std::set<Transition>& transitions) {
    TraceGrammar g;
    std::deque<Nonterminal> work;
    auto discover = [&](const Nonterminal& x) {
        if (g.nonterminals.insert(x).second) work.push_back(x);
    };
    for (const auto& s : initial) {
        Nonterminal x{s, kBottom, std::nullopt};
        g.start.push_back(x);
        discover(x);
    }
    while (!work.empty()) {
        const Nonterminal x = work.front();
        work.pop_front();
        for (const auto& t : transitions) {
            if (t.from != x.state) continue;
            switch (kindOfLabel(alphabet, t.label)) {
                case Kind::Push:
                    // guess the landing state r of the push's matching pop
                    for (const auto& r : states) {
                        Production pr{x, t, {{t.to, t.stack, r}, {r, x.stackSym, x.cont}}};
                        discover(pr.rhs[0]);
                        discover(pr.rhs[1]);
                        g.productions.push_back(std::move(pr));
                    }
                    break;
                case Kind::Simple:
                case Kind::Silent: {
                    Production pr{x, t, {{t.to, x.stackSym, x.cont}}};
                    discover(pr.rhs[0]);
                    g.productions.push_back(std::move(pr));
                    break;
                }
                case Kind::Pop:
                    if (t.stack == kBottom) {
                        if (x.stackSym == kBottom) {
                            Production pr{x, t, {{t.to, kBottom, std::nullopt}}};
                            discover(pr.rhs[0]);
                            g.productions.push_back(std::move(pr));
                        }
                    } else if (x.stackSym == t.stack && x.cont && *x.cont == t.to) {
                        g.productions.push_back({x, t, {}});
                    }
                    break;
            }
        }
    }
    return g;
}

// Shortest observable word per grammar fact, shortlex with lexicographic ties.
struct BestWord {
    static constexpr std::size_t kInf = static_cast<std::size_t>(-1);
    std::size_t len = kInf;
    Word word;
    bool known() const { return len != kInf; }
};

inline bool shortlexImproves(const BestWord& current, std::size_t len, const Word& word) {
    if (len != current.len) return len < current.len;
    return word < current.word;
}

// Two weighted fixed points over the grammar, computed without materializing
// productions. Phase one settles c(q,Z,p): the shortest observable yield that
// consumes Z from state q and lands in p. Phase two settles d(q,Z): the
// shortest observable prefix after which the machine sits in q with Z on top
// (kBottom meaning the empty stack). The landing-state coordinate of d is
// dropped because pushes guess every landing state at once, so d is uniform
// over it. Silent labels weigh nothing and both kEps and kTau count as silent,
// which lets VPAs and VPTSs share the analysis.
class GrammarAnalysis {
public:
    GrammarAnalysis(const PartitionedAlphabet& alphabet, const std::set<std::string>& states,
                    const std::set<std::string>& initial, const std::set<Transition>& transitions) {
        for (const auto& s : states) {
            stateId_[s] = static_cast<int>(stateNames_.size());
            stateNames_.push_back(s);
        }
        for (const auto& t : transitions)
            if (kindOfLabel(alphabet, t.label) == Kind::Push && !stackId_.count(t.stack)) {
                stackId_[t.stack] = static_cast<int>(stackNames_.size());
                stackNames_.push_back(t.stack);
            }
        S_ = static_cast<int>(stateNames_.size());
        Z_ = static_cast<int>(stackNames_.size());

        for (const auto& t : transitions) {
            Move m;
            m.from = stateId_.at(t.from);
            m.to = stateId_.at(t.to);
            m.silent = t.label == kEps || t.label == kTau;
            m.label = t.label;
            switch (kindOfLabel(alphabet, t.label)) {
                case Kind::Push:
                    m.z = stackId_.at(t.stack);
                    pushes_.push_back(m);
                    break;
                case Kind::Pop:
                    if (t.stack == kBottom) {
                        m.z = -1;
                        popBottoms_.push_back(m);
                    } else if (auto it = stackId_.find(t.stack); it != stackId_.end()) {
                        m.z = it->second;
                        pops_.push_back(m);
                    }
                    // a pop on a never-pushed symbol cannot fire and has no grammar fact
                    break;
                default:
                    m.z = -1;
                    simples_.push_back(m);
                    break;
            }
        }

        c_.assign(static_cast<std::size_t>(S_) * Z_ * S_, {});
        cSettled_.assign(c_.size(), 0);
        d_.assign(static_cast<std::size_t>(S_) * (Z_ + 1), {});
        dSettled_.assign(d_.size(), 0);
        stateReach_.assign(S_, {});
        settledByState_.assign(S_, {});
        simplesByTo_.assign(S_, {});
        for (std::size_t i = 0; i < simples_.size(); ++i)
            simplesByTo_[simples_[i].to].push_back(static_cast<int>(i));
        pushesByToZ_.assign(static_cast<std::size_t>(S_) * std::max(Z_, 1), {});
        for (std::size_t i = 0; i < pushes_.size(); ++i)
            pushesByToZ_[pushes_[i].to * Z_ + pushes_[i].z].push_back(static_cast<int>(i));

        runYieldPhase();
        runPrefixPhase(initial);
    }

    // shortest observable prefix that puts the machine in `state`
    const BestWord& reach(const std::string& state) const {
        auto it = stateId_.find(state);
        return it == stateId_.end() ? none_ : stateReach_[it->second];
    }

    // shortest observable prefix reaching `state` with `stackSym` on top
    // (kBottom asks for the empty stack)
    const BestWord& reachWithTop(const std::string& state, const std::string& stackSym) const {
        auto it = stateId_.find(state);
        if (it == stateId_.end()) return none_;
        if (stackSym == kBottom) return d_[dKey(it->second, -1)];
        auto z = stackId_.find(stackSym);
        return z == stackId_.end() ? none_ : d_[dKey(it->second, z->second)];
    }

    // shortest observable yield consuming `stackSym` from `state` into `cont`
    const BestWord& yield(const std::string& state, const std::string& stackSym,
                          const std::string& cont) const {
        auto q = stateId_.find(state);
        auto z = stackId_.find(stackSym);
        auto p = stateId_.find(cont);
        if (q == stateId_.end() || z == stackId_.end() || p == stateId_.end()) return none_;
        return c_[cKey(q->second, z->second, p->second)];
    }

private:
    struct Move {
        int from, to, z;
        std::string label;
        bool silent;
    };

    using PqEntry = std::tuple<std::size_t, Word, std::size_t>; // len, word, table key

    std::size_t cKey(int q, int z, int p) const {
        return (static_cast<std::size_t>(q) * Z_ + z) * S_ + p;
    }
    std::size_t dKey(int q, int z) const {
        return static_cast<std::size_t>(q) * (Z_ + 1) + (z + 1);
    }

    static Word glue(const Move& m, const Word* tail1 = nullptr, const Word* tail2 = nullptr) {
        Word w;
        if (!m.silent) w.push_back(m.label);
        if (tail1) w.insert(w.end(), tail1->begin(), tail1->end());
        if (tail2) w.insert(w.end(), tail2->begin(), tail2->end());
        return w;
    }

    static Word extend(const Word& prefix, const Move& m, const Word* tail = nullptr) {
        Word w = prefix;
        if (!m.silent) w.push_back(m.label);
        if (tail) w.insert(w.end(), tail->begin(), tail->end());
        return w;
    }

    // tables share one relaxation: keep the tentative best, queue improvements
    template <typename MakeWord>
    static void relax(std::vector<BestWord>& table,
                      std::priority_queue<PqEntry, std::vector<PqEntry>, std::greater<>>& pq,
                      std::size_t key, std::size_t len, MakeWord&& makeWord) {
        if (len > table[key].len) return;
        Word w = makeWord();
        if (!shortlexImproves(table[key], len, w)) return;
        table[key].len = len;
        table[key].word = w;
        pq.emplace(len, std::move(w), key);
    }

    void runYieldPhase() {
        std::priority_queue<PqEntry, std::vector<PqEntry>, std::greater<>> pq;
        for (const auto& m : pops_)
            relax(c_, pq, cKey(m.from, m.z, m.to), m.silent ? 0 : 1, [&] { return glue(m); });
        while (!pq.empty()) {
            auto [len, word, key] = pq.top();
            pq.pop();
            if (cSettled_[key]) continue;
            cSettled_[key] = 1;
            const int p = static_cast<int>(key % S_);
            const int z = static_cast<int>(key / S_ % Z_);
            const int q = static_cast<int>(key / S_ / Z_);
            settledByState_[q].push_back({z, p});
            // tail of a simple move with the same obligation
            for (int mi : simplesByTo_[q]) {
                const Move& m = simples_[mi];
                relax(c_, pq, cKey(m.from, z, p), len + !m.silent,
                      [&] { return glue(m, &word); });
            }
            // first child of a push: needs a settled sibling starting in p
            for (int mi : pushesByToZ_[static_cast<std::size_t>(q) * Z_ + z]) {
                const Move& m = pushes_[mi];
                for (const auto& [z2, p2] : settledByState_[p]) {
                    const BestWord& sib = c_[cKey(p, z2, p2)];
                    relax(c_, pq, cKey(m.from, z2, p2), len + 1 + sib.len,
                          [&] { return glue(m, &word, &sib.word); });
                }
            }
            // second child of a push whose first child already settled
            for (const auto& m : pushes_) {
                const std::size_t first = cKey(m.to, m.z, q);
                if (!cSettled_[first]) continue;
                relax(c_, pq, cKey(m.from, z, p), len + 1 + c_[first].len,
                      [&] { return glue(m, &c_[first].word, &word); });
            }
        }
    }

    void runPrefixPhase(const std::set<std::string>& initial) {
        std::priority_queue<PqEntry, std::vector<PqEntry>, std::greater<>> pq;
        for (const auto& s : initial)
            relax(d_, pq, dKey(stateId_.at(s), -1), 0, [] { return Word{}; });
        std::vector<std::vector<int>> pushesFrom(S_), popBottomsFrom(S_), simplesFrom(S_);
        for (std::size_t i = 0; i < pushes_.size(); ++i)
            pushesFrom[pushes_[i].from].push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < popBottoms_.size(); ++i)
            popBottomsFrom[popBottoms_[i].from].push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < simples_.size(); ++i)
            simplesFrom[simples_[i].from].push_back(static_cast<int>(i));

        while (!pq.empty()) {
            auto [len, word, key] = pq.top();
            pq.pop();
            if (dSettled_[key]) continue;
            dSettled_[key] = 1;
            const int z = static_cast<int>(key % (Z_ + 1)) - 1;
            const int q = static_cast<int>(key / (Z_ + 1));
            if (shortlexImproves(stateReach_[q], len, word)) {
                stateReach_[q].len = len;
                stateReach_[q].word = word;
            }
            for (int mi : simplesFrom[q]) {
                const Move& m = simples_[mi];
                relax(d_, pq, dKey(m.to, z), len + !m.silent, [&] { return extend(word, m); });
            }
            if (z == -1)
                for (int mi : popBottomsFrom[q]) {
                    const Move& m = popBottoms_[mi];
                    relax(d_, pq, dKey(m.to, -1), len + !m.silent, [&] { return extend(word, m); });
                }
            // matched pops need no edge: the push below already paid for the
            // sibling that becomes leftmost after them
            for (int mi : pushesFrom[q]) {
                const Move& m = pushes_[mi];
                relax(d_, pq, dKey(m.to, m.z), len + 1, [&] { return extend(word, m); });
                for (int r = 0; r < S_; ++r) {
                    const std::size_t child = cKey(m.to, m.z, r);
                    if (!cSettled_[child]) continue;
                    relax(d_, pq, dKey(r, z), len + 1 + c_[child].len,
                          [&] { return extend(word, m, &c_[child].word); });
                }
            }
        }
    }

    std::vector<std::string> stateNames_, stackNames_;
    std::map<std::string, int> stateId_, stackId_;
    int S_ = 0, Z_ = 0;
    std::vector<Move> pushes_, pops_, popBottoms_, simples_;
    std::vector<std::vector<int>> simplesByTo_, pushesByToZ_;
    std::vector<std::vector<std::pair<int, int>>> settledByState_;
    std::vector<BestWord> c_, d_;
    std::vector<char> cSettled_, dSettled_;
    std::vector<BestWord> stateReach_;
    inline static const BestWord none_{};
};

} // namespace detail

// The grammar of a transition system, start symbols [s0, kBottom, -].
inline TraceGrammar buildTraceGrammar(const Vpts& v) {
    return detail::buildGrammar(v.alphabet, v.states, v.initial, v.transitions);
}

} // namespace vpconf
