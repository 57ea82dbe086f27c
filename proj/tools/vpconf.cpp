// vpconf.cpp -- command-line front end: conformance checking plus unary
// operations over the JSON interchange documents.
//
// Exit codes: 0 for a positive answer (PASS, member, valid, or an artifact
// produced), 1 for a negative answer (FAIL, non-member, invalid), 2 for any
// input or contract error. Artifacts go to standard output in canonical form
// so runs are diffable; diagnostics go to standard error.
#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include <vpconf/conformance.hpp>
#include <vpconf/json_io.hpp>

namespace {

using namespace vpconf;
using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t defaultOracleLen() {
    if (const char* env = std::getenv("VPCONF_ORACLE_LEN")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0) return static_cast<std::size_t>(v);
        throw Error(std::string("VPCONF_ORACLE_LEN: '") + env + "' is not a length");
    }
    return 6;
}

struct Loaded {
    AutomatonDocument doc;

    const Vpa& vpa() const { return doc.vpa; }
    const Vpts& vpts() const { return doc.io.underlying; }
};

Loaded load(const std::string& path, std::initializer_list<const char*> kinds,
            const char* command) {
    Loaded in{readDocument(path)};
    bool ok = false;
    for (const char* k : kinds) ok = ok || in.doc.kind == k;
    if (!ok) {
        std::string expected;
        for (const char* k : kinds) expected += (expected.empty() ? "" : " or ") + std::string(k);
        throw Error(path + ": " + command + " needs a " + expected + " document, got " +
                    in.doc.kind);
    }
    std::vector<std::string> reports;
    if (in.doc.kind == "vpa") reports = validate(in.doc.vpa);
    else if (in.doc.kind == "vpts") reports = validate(in.doc.io.underlying);
    else reports = validate(in.doc.io);
    if (!reports.empty()) {
        std::string msg = path + ": invalid document";
        for (const auto& r : reports) msg += "\n  " + r;
        throw Error(msg);
    }
    return in;
}

const char* clauseName(Clause c) {
    return c == Clause::DesiredMissing ? "desired-missing" : "forbidden-present";
}

std::vector<Word> shortlexSorted(const std::set<Word>& words) {
    std::vector<Word> out(words.begin(), words.end());
    std::sort(out.begin(), out.end(), ShortlexLess{});
    return out;
}

int runCheck(const std::string& specPath, const std::string& iutPath, const std::string& dPath,
             const std::string& fPath, bool explain, bool asJson,
             std::optional<std::size_t> oracleLen) {
    const Loaded spec = load(specPath, {"iovpts"}, "check");
    const Loaded iut = load(iutPath, {"vpts", "iovpts"}, "check");
    const Loaded d = load(dPath, {"vpa"}, "check");
    const Loaded f = load(fPath, {"vpa"}, "check");

    const auto buildStart = Clock::now();
    const FaultModel model = buildFaultModel(spec.doc.io, d.vpa(), f.vpa());
    const double buildMs = msSince(buildStart);

    const auto checkStart = Clock::now();
    const Verdict verdict = checkConformance(iut.vpts(), spec.doc.io, d.vpa(), f.vpa());
    const double checkMs = msSince(checkStart);

    if (oracleLen) {
        // bounded self-audit: recompute the answer from first principles
        std::set<Word> violations;
        for (const auto& word : enumerateOtr(iut.vpts(), *oracleLen).words)
            if (accepts(model.suite, word)) violations.insert(word);
        const bool boundedFail = verdict.witness && verdict.witness->size() <= *oracleLen;
        if (verdict.pass || !boundedFail) {
            if (!violations.empty())
                throw Error("oracle disagreement: verdict misses the violation '" +
                            renderWord(*violations.begin()) + "'");
        } else {
            const Word front =
                *std::min_element(violations.begin(), violations.end(), ShortlexLess{});
            if (violations.empty() || front != *verdict.witness)
                throw Error("oracle disagreement: witness '" + renderWord(*verdict.witness) +
                            "' is not the bounded minimum");
        }
    }

    if (asJson) {
        nlohmann::ordered_json out;
        out["outcome"] = verdict.pass ? "PASS" : "FAIL";
        out["witness"] = verdict.witness ? nlohmann::ordered_json(renderWord(*verdict.witness))
                                         : nlohmann::ordered_json(nullptr);
        out["clause"] = verdict.clause ? nlohmann::ordered_json(clauseName(*verdict.clause))
                                       : nlohmann::ordered_json(nullptr);
        out["suiteStates"] = verdict.suiteStates;
        out["bound"] = verdict.bound;
        out["timings"]["buildMs"] = buildMs;
        out["timings"]["checkMs"] = checkMs;
        std::cout << out.dump(2) << "\n";
    } else if (verdict.pass) {
        std::cout << "PASS\n";
    } else {
        std::cout << "FAIL\n";
        std::cout << "witness: " << renderWord(*verdict.witness) << "\n";
        std::cout << "clause: " << clauseName(*verdict.clause) << "\n";
        if (explain) {
            const Vpa specOtr = inducedVpa(contract(spec.vpts()));
            const auto yes = [](bool b) { return b ? "yes" : "no"; };
            std::cout << "witness in desired language: " << yes(accepts(d.vpa(), *verdict.witness))
                      << "\n";
            std::cout << "witness in forbidden language: "
                      << yes(accepts(f.vpa(), *verdict.witness)) << "\n";
            std::cout << "witness in specification traces: "
                      << yes(accepts(specOtr, *verdict.witness)) << "\n";
        }
    }
    return verdict.pass ? 0 : 1;
}

int runValidate(const std::string& path) {
    const AutomatonDocument doc = readDocument(path);
    std::vector<std::string> reports;
    if (doc.kind == "vpa") reports = validate(doc.vpa);
    else if (doc.kind == "vpts") reports = validate(doc.io.underlying);
    else reports = validate(doc.io);
    if (reports.empty()) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& r : reports) std::cout << r << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"visibly pushdown conformance tools"};
    app.require_subcommand(1);
    int exitCode = 0;

    std::string specPath, iutPath, dPath, fPath;
    bool explain = false, asJson = false;
    long long oracleLenArg = -1;
    auto* check = app.add_subcommand(
        "check", "decide whether IUT conforms visibly to SPEC for the defect languages D and F");
    check->add_option("SPEC", specPath, "specification document (iovpts)")->required();
    check->add_option("IUT", iutPath, "implementation document (vpts or iovpts)")->required();
    check->add_option("D", dPath, "desired-language automaton (vpa)")->required();
    check->add_option("F", fPath, "forbidden-language automaton (vpa)")->required();
    check->add_flag("--witness", explain, "explain the witness memberships on FAIL");
    check->add_flag("--json", asJson, "print the verdict as JSON");
    check->add_option("--max-oracle-len", oracleLenArg,
                      "cross-check the verdict against brute-force enumeration up to this length");
    check->callback([&] {
        std::optional<std::size_t> oracleLen;
        if (check->count("--max-oracle-len")) {
            if (oracleLenArg < 0) throw Error("--max-oracle-len: length must be nonnegative");
            oracleLen = static_cast<std::size_t>(oracleLenArg);
        }
        exitCode = runCheck(specPath, iutPath, dPath, fPath, explain, asJson, oracleLen);
    });

    std::string path, word;
    auto* complementCmd =
        app.add_subcommand("complement", "complement a deterministic automaton");
    complementCmd->add_option("FILE", path, "automaton document (vpa)")->required();
    complementCmd->callback([&] {
        std::cout << serialize(complement(load(path, {"vpa"}, "complement").vpa()));
    });

    auto* contractCmd = app.add_subcommand(
        "contract", "remove pop transitions that can never fire, then unreachable states");
    contractCmd->add_option("FILE", path, "transition-system document (vpts or iovpts)")
        ->required();
    contractCmd->callback([&] {
        const Loaded in = load(path, {"vpts", "iovpts"}, "contract");
        if (in.doc.kind == "iovpts") {
            Iovpts out = in.doc.io;
            out.underlying = contract(in.doc.io.underlying);
            std::cout << serialize(out);
        } else {
            std::cout << serialize(contract(in.vpts()));
        }
    });

    auto* toVpa = app.add_subcommand(
        "to-vpa", "induce the automaton that accepts exactly the observable traces");
    toVpa->add_option("FILE", path, "transition-system document (vpts or iovpts)")->required();
    toVpa->callback(
        [&] { std::cout << serialize(inducedVpa(load(path, {"vpts", "iovpts"}, "to-vpa").vpts())); });

    auto* empty = app.add_subcommand(
        "empty", "print EMPTY or the shortest accepted word, ties broken lexicographically");
    empty->add_option("FILE", path, "automaton document (vpa)")->required();
    empty->callback([&] {
        const EmptinessResult r = isEmptyWithWitness(load(path, {"vpa"}, "empty").vpa());
        std::cout << (r.empty() ? "EMPTY" : renderWord(*r.witness)) << "\n";
    });

    long long maxLenArg = -1;
    auto* enumerateCmd = app.add_subcommand(
        "enumerate", "list the bounded language (vpa) or observable traces (vpts, iovpts)");
    enumerateCmd->add_option("FILE", path, "any automaton or transition-system document")
        ->required();
    enumerateCmd->add_option("--max-len", maxLenArg,
                             "length bound (default: VPCONF_ORACLE_LEN or 6)");
    enumerateCmd->callback([&] {
        std::size_t maxLen = defaultOracleLen();
        if (enumerateCmd->count("--max-len")) {
            if (maxLenArg < 0) throw Error("--max-len: length must be nonnegative");
            maxLen = static_cast<std::size_t>(maxLenArg);
        }
        const Loaded in = load(path, {"vpa", "vpts", "iovpts"}, "enumerate");
        const std::set<Word> words = in.doc.isVpa() ? enumerateVpa(in.vpa(), maxLen).words
                                                    : enumerateOtr(in.vpts(), maxLen).words;
        for (const auto& w : shortlexSorted(words)) std::cout << renderWord(w) << "\n";
    });

    auto* member = app.add_subcommand(
        "member", "exit 0 when the word is accepted (vpa) or observable (vpts, iovpts)");
    member->add_option("FILE", path, "any automaton or transition-system document")->required();
    member->add_option("WORD", word, "word; single-character symbols concatenate, _EPS_ is empty")
        ->required();
    member->callback([&] {
        const Loaded in = load(path, {"vpa", "vpts", "iovpts"}, "member");
        const Vpa a = in.doc.isVpa() ? in.vpa() : inducedVpa(in.vpts());
        const bool ok = accepts(a, parseWord(a.alphabet, word));
        std::cout << (ok ? "yes" : "no") << "\n";
        exitCode = ok ? 0 : 1;
    });

    auto* validateCmd =
        app.add_subcommand("validate", "report every invariant violation in the document");
    validateCmd->add_option("FILE", path, "any automaton or transition-system document")
        ->required();
    validateCmd->callback([&] { exitCode = runValidate(path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exitCode;
}
