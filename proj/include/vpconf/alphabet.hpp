// alphabet.hpp -- partitioned input alphabets, reserved spellings, shared basics.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace vpconf {

// Reserved spellings shared by the in-memory model and the JSON format.
// kBottom marks a pop on the empty stack and is never a member of the stack
// alphabet; kAny is the stack placeholder of moves that ignore the stack.
inline const std::string kBottom = "_BOTTOM_";
inline const std::string kAny = "_ANY_";
inline const std::string kEps = "_EPS_"; // silent automaton move
inline const std::string kTau = "_TAU_"; // silent transition-system move

inline bool isReserved(const std::string& s) {
    return s == kBottom || s == kAny || s == kEps || s == kTau;
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Word = std::vector<std::string>;

// length-major, then lexicographic; the order used for shortest witnesses
struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

enum class Kind { Push, Pop, Simple, Silent };

struct PartitionedAlphabet {
    std::set<std::string> calls;
    std::set<std::string> returns;
    std::set<std::string> internals;

    bool operator==(const PartitionedAlphabet&) const = default;

    bool contains(const std::string& symbol) const {
        return calls.count(symbol) || returns.count(symbol) || internals.count(symbol);
    }

    std::set<std::string> allSymbols() const {
        std::set<std::string> all(calls.begin(), calls.end());
        all.insert(returns.begin(), returns.end());
        all.insert(internals.begin(), internals.end());
        return all;
    }
};

// silent labels are deliberately excluded: callers decide which one is legal
inline Kind kindOfLabel(const PartitionedAlphabet& alphabet, const std::string& label) {
    if (label == kEps || label == kTau) return Kind::Silent;
    if (alphabet.calls.count(label)) return Kind::Push;
    if (alphabet.returns.count(label)) return Kind::Pop;
    if (alphabet.internals.count(label)) return Kind::Simple;
    throw Error("symbol '" + label + "' is not in the alphabet");
}

inline std::vector<std::string> validateAlphabet(const PartitionedAlphabet& a) {
    std::vector<std::string> out;
    auto overlap = [&](const std::set<std::string>& x, const std::set<std::string>& y,
                       const char* xn, const char* yn) {
        for (const auto& s : x)
            if (y.count(s))
                out.push_back("alphabet: symbol '" + s + "' is in both " + xn + " and " + yn);
    };
    overlap(a.calls, a.returns, "calls", "returns");
    overlap(a.calls, a.internals, "calls", "internals");
    overlap(a.returns, a.internals, "returns", "internals");
    for (const auto& s : a.allSymbols())
        if (isReserved(s)) out.push_back("alphabet: symbol '" + s + "' is reserved");
    if (a.allSymbols().empty()) out.push_back("alphabet: no symbols at all");
    return out;
}

} // namespace vpconf
