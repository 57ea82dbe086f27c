// json_io.hpp -- the JSON interchange format: strict parsing with diagnostics
// that name the file and locus, and canonical serialization for golden diffs.
//
// Canonical means: fixed key order (kind, alphabet, io, states, initial,
// stack, finals, transitions), all lists sorted, two-space indentation, one
// trailing newline. Parsing rejects unknown keys, so parse -> serialize ->
// parse is the identity and serialized bytes are comparable.
#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vpa.hpp"
#include "vpts.hpp"

namespace vpconf {

// One parsed document of any kind. The automaton view is always usable: for
// transition systems it is the induced automaton's shell with every state
// final, but consumers should dispatch on `kind` and use the precise field.
struct AutomatonDocument {
    std::string kind;   // "vpa" | "vpts" | "iovpts"
    std::string source; // file name carried into diagnostics
    Vpa vpa;            // kind == "vpa"
    Iovpts io;          // kind == "vpts" (empty io sets) or "iovpts"

    bool isVpa() const { return kind == "vpa"; }
    const PartitionedAlphabet& alphabet() const {
        return isVpa() ? vpa.alphabet : io.underlying.alphabet;
    }
};

namespace detail {

using json = nlohmann::ordered_json;

[[noreturn]] inline void fail(const std::string& source, const std::string& locus,
                              const std::string& what) {
    throw Error(source + ": " + (locus.empty() ? "" : locus + ": ") + what);
}

inline std::set<std::string> stringSet(const std::string& source, const json& j,
                                       const std::string& locus) {
    if (!j.is_array()) fail(source, locus, "expected a list of strings");
    std::set<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& e = j[i];
        if (!e.is_string())
            fail(source, locus + "[" + std::to_string(i) + "]", "expected a string");
        if (!out.insert(e.get<std::string>()).second)
            fail(source, locus + "[" + std::to_string(i) + "]",
                 "duplicate entry '" + e.get<std::string>() + "'");
    }
    return out;
}

inline const json& field(const std::string& source, const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) fail(source, "", "missing key '" + key + "'");
    return *it;
}

inline PartitionedAlphabet parseAlphabet(const std::string& source, const json& j) {
    if (!j.is_object()) fail(source, "alphabet", "expected an object");
    for (const auto& [key, value] : j.items())
        if (key != "calls" && key != "returns" && key != "internals")
            fail(source, "alphabet", "unknown key '" + key + "'");
    PartitionedAlphabet out;
    out.calls = stringSet(source, field(source, j, "calls"), "alphabet.calls");
    out.returns = stringSet(source, field(source, j, "returns"), "alphabet.returns");
    out.internals = stringSet(source, field(source, j, "internals"), "alphabet.internals");
    return out;
}

inline std::set<Transition> parseTransitions(const std::string& source, const json& j) {
    if (!j.is_array()) fail(source, "transitions", "expected a list");
    std::set<Transition> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string locus = "transitions[" + std::to_string(i) + "]";
        const json& e = j[i];
        if (!e.is_object()) fail(source, locus, "expected an object");
        for (const auto& [key, value] : e.items()) {
            if (key != "from" && key != "label" && key != "stack" && key != "to")
                fail(source, locus, "unknown key '" + key + "'");
            if (!value.is_string()) fail(source, locus + "." + key, "expected a string");
        }
        for (const char* key : {"from", "label", "stack", "to"})
            if (!e.contains(key)) fail(source, locus, std::string("missing key '") + key + "'");
        Transition t{e["from"], e["label"], e["stack"], e["to"]};
        if (!out.insert(t).second) fail(source, locus, "duplicate transition " + describe(t));
    }
    return out;
}

inline json renderTransitions(const std::set<Transition>& transitions) {
    json list = json::array();
    for (const auto& t : transitions) {
        json e;
        e["from"] = t.from;
        e["label"] = t.label;
        e["stack"] = t.stack;
        e["to"] = t.to;
        list.push_back(std::move(e));
    }
    return list;
}

inline json renderAlphabet(const PartitionedAlphabet& a) {
    json out;
    out["calls"] = a.calls;
    out["returns"] = a.returns;
    out["internals"] = a.internals;
    return out;
}

} // namespace detail

inline AutomatonDocument parseDocument(const std::string& text, const std::string& source) {
    detail::json j;
    try {
        j = detail::json::parse(text);
    } catch (const detail::json::parse_error& e) {
        throw Error(source + ": " + e.what());
    }
    if (!j.is_object()) detail::fail(source, "", "expected a top-level object");

    AutomatonDocument doc;
    doc.source = source;
    const detail::json& kind = detail::field(source, j, "kind");
    if (!kind.is_string()) detail::fail(source, "kind", "expected a string");
    doc.kind = kind.get<std::string>();
    if (doc.kind != "vpa" && doc.kind != "vpts" && doc.kind != "iovpts")
        detail::fail(source, "kind", "expected \"vpa\", \"vpts\" or \"iovpts\"");

    std::set<std::string> allowed{"kind", "alphabet", "states", "initial", "stack", "transitions"};
    if (doc.kind == "vpa") allowed.insert("finals");
    if (doc.kind == "iovpts") allowed.insert("io");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key))
            detail::fail(source, "", "unknown key '" + key + "' in a " + doc.kind + " document");

    const PartitionedAlphabet alphabet =
        detail::parseAlphabet(source, detail::field(source, j, "alphabet"));
    auto states = detail::stringSet(source, detail::field(source, j, "states"), "states");
    auto initial = detail::stringSet(source, detail::field(source, j, "initial"), "initial");
    auto stack = detail::stringSet(source, detail::field(source, j, "stack"), "stack");
    auto transitions = detail::parseTransitions(source, detail::field(source, j, "transitions"));

    if (doc.kind == "vpa") {
        doc.vpa = Vpa{alphabet, std::move(states), std::move(initial), std::move(stack),
                      std::move(transitions),
                      detail::stringSet(source, detail::field(source, j, "finals"), "finals")};
    } else {
        doc.io.underlying = Vpts{alphabet, std::move(states), std::move(initial),
                                 std::move(stack), std::move(transitions)};
        if (doc.kind == "iovpts") {
            const detail::json& io = detail::field(source, j, "io");
            if (!io.is_object()) detail::fail(source, "io", "expected an object");
            for (const auto& [key, value] : io.items())
                if (key != "inputs" && key != "outputs")
                    detail::fail(source, "io", "unknown key '" + key + "'");
            doc.io.inputs = detail::stringSet(source, detail::field(source, io, "inputs"),
                                              "io.inputs");
            doc.io.outputs = detail::stringSet(source, detail::field(source, io, "outputs"),
                                               "io.outputs");
        }
    }
    return doc;
}

inline AutomatonDocument readDocument(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parseDocument(buffer.str(), path);
}

inline std::string serialize(const Vpa& a) {
    detail::json j;
    j["kind"] = "vpa";
    j["alphabet"] = detail::renderAlphabet(a.alphabet);
    j["states"] = a.states;
    j["initial"] = a.initial;
    j["stack"] = a.stackAlphabet;
    j["finals"] = a.finals;
    j["transitions"] = detail::renderTransitions(a.transitions);
    return j.dump(2) + "\n";
}

inline std::string serialize(const Vpts& v) {
    detail::json j;
    j["kind"] = "vpts";
    j["alphabet"] = detail::renderAlphabet(v.alphabet);
    j["states"] = v.states;
    j["initial"] = v.initial;
    j["stack"] = v.stackAlphabet;
    j["transitions"] = detail::renderTransitions(v.transitions);
    return j.dump(2) + "\n";
}

inline std::string serialize(const Iovpts& io) {
    detail::json j;
    j["kind"] = "iovpts";
    j["alphabet"] = detail::renderAlphabet(io.underlying.alphabet);
    j["io"]["inputs"] = io.inputs;
    j["io"]["outputs"] = io.outputs;
    j["states"] = io.underlying.states;
    j["initial"] = io.underlying.initial;
    j["stack"] = io.underlying.stackAlphabet;
    j["transitions"] = detail::renderTransitions(io.underlying.transitions);
    return j.dump(2) + "\n";
}

inline std::string serialize(const AutomatonDocument& doc) {
    if (doc.kind == "vpa") return serialize(doc.vpa);
    if (doc.kind == "iovpts") return serialize(doc.io);
    return serialize(doc.io.underlying);
}

// The empty word prints as the reserved silent spelling so it stays a single
// token. Words over single-character symbols concatenate; anything else joins
// with spaces.
inline std::string renderWord(const Word& word) {
    if (word.empty()) return kEps;
    bool allSingle = true;
    for (const auto& s : word) allSingle = allSingle && s.size() == 1;
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !allSingle) out += ' ';
        out += word[i];
    }
    return out;
}

// Inverse of renderWord against a known alphabet: "_EPS_" is the empty word,
// spaces separate multi-character symbols, and a spaceless string splits into
// characters when every character is a symbol.
inline Word parseWord(const PartitionedAlphabet& alphabet, const std::string& text) {
    if (text == kEps || text.empty()) return {};
    Word out;
    if (text.find(' ') != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) out.push_back(tok);
    } else if (alphabet.contains(text)) {
        out.push_back(text);
    } else {
        for (char c : text) out.push_back(std::string(1, c));
    }
    for (const auto& s : out)
        if (!alphabet.contains(s)) throw Error("word symbol '" + s + "' is not in the alphabet");
    return out;
}

} // namespace vpconf
