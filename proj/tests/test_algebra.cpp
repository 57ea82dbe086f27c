// test_algebra.cpp -- closure constructions against the enumeration oracle.
#include <catch2/catch_amalgamated.hpp>

#include <vpconf/algebra.hpp>
#include <vpconf/enumerate.hpp>
#include <vpconf/vpts.hpp>

#include "fixtures.hpp"
#include "gen.hpp"
#include "util.hpp"

using namespace vpconf;
using tu::w;

namespace {

// every state any run can sit in after reading the word, silent moves closed
std::set<std::string> reachedOn(const Vpa& a, const Word& word) {
    detail::TransitionIndex index(a.transitions);
    auto configs = detail::initialConfigs(a.initial);
    detail::silentClosure(a.alphabet, index, kEps, configs);
    for (const auto& sym : word) {
        configs = detail::stepAll(a.alphabet, index, configs, sym);
        detail::silentClosure(a.alphabet, index, kEps, configs);
    }
    std::set<std::string> states;
    for (const auto& c : configs) states.insert(c.state);
    return states;
}

// one complete accepting state over the a/b alphabet; accepts every word
Vpa universalAb() {
    Vpa u;
    u.alphabet = fx::anbn().alphabet;
    u.states = {"u"};
    u.initial = {"u"};
    u.finals = {"u"};
    u.stackAlphabet = {"U"};
    u.transitions = {{"u", "a", "U", "u"}, {"u", "b", "U", "u"}, {"u", "b", kBottom, "u"}};
    return u;
}

std::set<Word> setUnion(const std::set<Word>& x, const std::set<Word>& y) {
    std::set<Word> out = x;
    out.insert(y.begin(), y.end());
    return out;
}

std::set<Word> setMinus(const std::set<Word>& x, const std::set<Word>& y) {
    std::set<Word> out;
    for (const auto& v : x)
        if (!y.count(v)) out.insert(v);
    return out;
}

std::set<Word> setMeet(const std::set<Word>& x, const std::set<Word>& y) {
    std::set<Word> out;
    for (const auto& v : x)
        if (y.count(v)) out.insert(v);
    return out;
}

} // namespace

TEST_CASE("product of a machine with itself mirrors the machine") {
    const Vpa a = fx::anbn();
    const Vpa p = product(a, a);
    CHECK(p.states.size() == a.states.size() * a.states.size());
    CHECK(p.stackAlphabet.size() == a.stackAlphabet.size() * a.stackAlphabet.size());
    CHECK_FALSE(hasEpsilonMoves(p));
    CHECK(isDeterministic(p));
    for (const auto& word : tu::allWords({"a", "b"}, 6))
        CHECK(accepts(p, word) == accepts(a, word));
}

TEST_CASE("product pairs exactly the joint runs") {
    gen::Rng rng(2301);
    for (int i = 0; i < 15; ++i) {
        const Vpa a = gen::randomVpa(rng, 2 + i % 3);
        const Vpa b = gen::randomVpa(rng, 2 + (i + 1) % 3);
        const auto built = detail::productRaw(a, b);
        for (const auto& word : tu::allWords({"a", "b", "u"}, 4)) {
            const auto la = reachedOn(a, word);
            const auto lb = reachedOn(b, word);
            std::set<std::string> expect;
            for (const auto& x : la)
                for (const auto& y : lb) expect.insert(built.stateName.at({x, y}));
            CHECK(reachedOn(built.vpa, word) == expect);
        }
    }
}

TEST_CASE("operands must agree on the alphabet") {
    CHECK_THROWS_WITH(product(fx::anbn(), fx::desiredAut()),
                      Catch::Matchers::ContainsSubstring("x"));
    CHECK_THROWS_AS(unite(fx::anbn(), fx::forbiddenAx()), Error);
    CHECK_THROWS_AS(intersect(fx::desiredAut(), fx::anbn()), Error);
}

TEST_CASE("product keeps determinism and silent-freeness") {
    gen::Rng rng(2302);
    for (int i = 0; i < 20; ++i) {
        const Vpa a = gen::randomDetVpa(rng, 2 + i % 4);
        const Vpa b = gen::randomDetVpa(rng, 2 + (i + 2) % 4);
        const Vpa p = product(a, b);
        CHECK_FALSE(hasEpsilonMoves(p));
        std::string why;
        INFO(why);
        CHECK(isDeterministic(p, &why));
    }
}

TEST_CASE("intersection behaves like set intersection") {
    const Vpa a = fx::anbn();
    CHECK(enumerateVpa(intersect(a, universalAb()), 6).words == enumerateVpa(a, 6).words);
    CHECK(enumerateVpa(intersect(a, a), 6).words == enumerateVpa(a, 6).words);

    gen::Rng rng(2303);
    for (int i = 0; i < 30; ++i) {
        const Vpa x = gen::randomDetVpa(rng, 2 + i % 3);
        const Vpa y = gen::randomDetVpa(rng, 2 + (i + 1) % 3);
        CHECK(enumerateVpa(intersect(x, y), 5).words ==
              setMeet(enumerateVpa(x, 5).words, enumerateVpa(y, 5).words));
    }
}

TEST_CASE("the desired-behavior automaton meets the session complement on aabbx") {
    const Vpts spec = fx::specMachine().underlying;
    const Vpa comp = complement(inducedVpa(spec));
    const Vpa got = intersect(fx::desiredAut(), comp);
    CHECK(accepts(got, w("aabbx")));
    CHECK(enumerateVpa(got, 6).words ==
          setMinus(enumerateVpa(fx::desiredAut(), 6).words, enumerateOtr(spec, 6).words));
}

TEST_CASE("completion adds one sink and nothing else changes") {
    const Vpa a = fx::anbn();
    const Vpa nb = makeNonBlocking(a);
    CHECK(nb.states.size() == a.states.size() + 1);
    CHECK(nb.states.count("sink") == 1);
    CHECK(nb.finals == a.finals);
    CHECK(isDeterministic(nb));
    CHECK(nb.transitions.count({"s2", "a", "A", "sink"}) == 1);
    CHECK(enumerateVpa(nb, 6).words == enumerateVpa(a, 6).words);

    const Vpa u = universalAb();
    const Vpa same = makeNonBlocking(u);
    CHECK(same.states == u.states);
    CHECK(same.transitions == u.transitions);
}

TEST_CASE("completed machines never strand a run") {
    gen::Rng rng(2304);
    for (int i = 0; i < 100; ++i) {
        const Vpa nb = makeNonBlocking(gen::randomVpa(rng, 2 + i % 4));
        const std::vector<std::string> stackPool(nb.stackAlphabet.begin(), nb.stackAlphabet.end());
        Configuration start;
        start.state = gen::pick(rng, nb.states);
        const std::size_t depth = rng() % 4;
        for (std::size_t d = 0; d < depth && !stackPool.empty(); ++d)
            start.stack.push_back(stackPool[rng() % stackPool.size()]);
        Word word;
        const std::vector<std::string> letters{"a", "b", "u"};
        const std::size_t len = 1 + rng() % 5;
        for (std::size_t k = 0; k < len; ++k) word.push_back(letters[rng() % letters.size()]);

        detail::TransitionIndex index(nb.transitions);
        std::set<Configuration> configs{start};
        detail::silentClosure(nb.alphabet, index, kEps, configs);
        for (const auto& sym : word) {
            configs = detail::stepAll(nb.alphabet, index, configs, sym);
            detail::silentClosure(nb.alphabet, index, kEps, configs);
            INFO("from " << start.state << " on " << tu::str(word));
            REQUIRE_FALSE(configs.empty());
        }
    }
}

TEST_CASE("union holds both operand languages") {
    const Vpa a = fx::anbn();
    CHECK(enumerateVpa(unite(a, a), 6).words == enumerateVpa(a, 6).words);

    const Vpa both = unite(fx::desiredAut(), fx::forbiddenAx());
    CHECK(accepts(both, w("abx")));
    CHECK(accepts(both, w("aax")));
    CHECK(enumerateVpa(both, 6).words ==
          setUnion(enumerateVpa(fx::desiredAut(), 6).words,
                   enumerateVpa(fx::forbiddenAx(), 6).words));

    gen::Rng rng(2305);
    for (int i = 0; i < 30; ++i) {
        const Vpa x = gen::randomDetVpa(rng, 2 + i % 3);
        const Vpa y = gen::randomDetVpa(rng, 2 + (i + 1) % 3);
        const Vpa u = unite(x, y);
        CHECK(enumerateVpa(u, 5).words ==
              setUnion(enumerateVpa(x, 5).words, enumerateVpa(y, 5).words));
        CHECK(isDeterministic(u));
        CHECK_FALSE(hasEpsilonMoves(u));
    }
}

TEST_CASE("complement flips membership exactly") {
    const Vpa a = fx::anbn();
    const Vpa comp = complement(a);
    CHECK(comp.states.size() <= a.states.size() + 1);
    for (const auto& word : tu::allWords({"a", "b"}, 6))
        CHECK(accepts(a, word) != accepts(comp, word));
    CHECK(enumerateVpa(complement(comp), 6).words == enumerateVpa(a, 6).words);
}

TEST_CASE("the session complement accepts exactly the unobserved words") {
    const Vpts spec = fx::specMachine().underlying;
    const Vpa specVpa = inducedVpa(spec);
    const Vpa comp = complement(specVpa);
    CHECK(comp.states.size() <= specVpa.states.size() + 1);
    CHECK(comp.finals == std::set<std::string>{"sink"});

    std::set<Word> everything;
    for (const auto& word : tu::allWords({"a", "b", "x"}, 6)) everything.insert(word);
    CHECK(enumerateVpa(comp, 6).words == setMinus(everything, enumerateOtr(spec, 6).words));
}

TEST_CASE("complement refuses nondeterministic input") {
    Vpa a = fx::anbn();
    a.transitions.insert({"s0", "a", "A", "s2"});
    CHECK_THROWS_AS(complement(a), Error);
}

TEST_CASE("runs over one word move the stack in lockstep") {
    gen::Rng rng(2306);
    for (int i = 0; i < 15; ++i) {
        const Vpa a = gen::randomVpa(rng, 2 + i % 3);
        const Vpa b = gen::randomVpa(rng, 2 + (i + 1) % 3);
        detail::TransitionIndex ia(a.transitions), ib(b.transitions);
        for (const auto& word : tu::allWords({"a", "b", "u"}, 4)) {
            auto ca = detail::initialConfigs(a.initial);
            auto cb = detail::initialConfigs(b.initial);
            for (const auto& sym : word) {
                ca = detail::stepAll(a.alphabet, ia, ca, sym);
                cb = detail::stepAll(b.alphabet, ib, cb, sym);
            }
            std::set<std::size_t> heights;
            for (const auto& c : ca) heights.insert(c.stack.size());
            for (const auto& c : cb) heights.insert(c.stack.size());
            CHECK(heights.size() <= 1);
        }
    }
}

TEST_CASE("construction sizes match the advertised bounds") {
    gen::Rng rng(2307);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 2 + rng() % 4, m = 2 + rng() % 4;
        const Vpa a = gen::randomDetVpa(rng, n);
        const Vpa b = gen::randomDetVpa(rng, m);
        CHECK(product(a, b).states.size() == n * m);
        CHECK(unite(a, b).states.size() <= (n + 1) * (m + 1));
        CHECK(complement(a).states.size() <= n + 1);
    }
}
