#include "dirfuzz/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "dirfuzz/algebra.hpp"
#include "dirfuzz/directability.hpp"
#include "dirfuzz/errors.hpp"
#include "dirfuzz/io.hpp"
#include "dirfuzz/mergetest.hpp"
#include "dirfuzz/random_gen.hpp"
#include "dirfuzz/threshold.hpp"

namespace dirfuzz {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitCapExceeded = 3;

// Usage problems detected after CLI11 parsing (bad file contents handed to
// the wrong command, malformed --word / --partition strings, ...).
struct UsageError : Error {
    using Error::Error;
};

// Line-oriented "key: value" report; keys appear in the order added.
class Report {
public:
    void add(std::string key, std::string value) {
        lines_.emplace_back(std::move(key), std::move(value));
    }
    void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
    void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }

    void write(std::ostream& out) const {
        for (const auto& [k, v] : lines_) out << k << ": " << v << "\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

ParsedAutomaton load(const std::string& path) { return parse_automaton(read_file(path)); }

FuzzyAutomaton load_fuzzy(const std::string& path) {
    auto parsed = load(path);
    if (!parsed.is_fuzzy())
        throw UsageError("'" + path + "' is an NFA file; this command needs 'fza v1' input");
    return parsed.fuzzy();
}

Mode parse_mode(const std::string& text) {
    auto mode = mode_from_string(text);
    if (!mode) throw UsageError("unknown mode '" + text + "' (use d1, d2 or d3)");
    return *mode;
}

Rational parse_ratio(const std::string& text, const char* what) {
    auto r = parse_rational(text);
    if (!r) throw UsageError(std::string("malformed ") + what + " '" + text + "'");
    return *r;
}

// Words on the command line are space-separated letter symbols; the token
// "eps" alone denotes the empty word.
template <typename Automaton>
Word parse_word(const Automaton& aut, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.size() == 1 && tokens[0] == "eps") return {};
    Word w;
    for (const auto& symbol : tokens) {
        auto x = aut.letter_index(symbol);
        if (!x) throw UsageError("unknown letter '" + symbol + "'");
        w.push_back(*x);
    }
    return w;
}

template <typename Automaton>
std::string format_word(const Automaton& aut, const Word& w) {
    if (w.empty()) return "eps";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += aut.letter_symbol(w[i]);
    }
    return out;
}

std::vector<int> parse_state_list(const FuzzyAutomaton& f, const std::string& text) {
    std::istringstream in(text);
    std::vector<int> out;
    std::string name;
    while (in >> name) {
        auto a = f.state_index(name);
        if (!a) throw UsageError("unknown state '" + name + "'");
        out.push_back(*a);
    }
    return out;
}

Partition parse_partition(const FuzzyAutomaton& f, const std::string& text) {
    std::vector<std::vector<int>> blocks;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t bar = text.find('|', pos);
        std::string part = text.substr(pos, bar == std::string::npos ? text.size() - pos : bar - pos);
        blocks.push_back(parse_state_list(f, part));
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    try {
        return Partition(f.state_count(), std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad partition: ") + e.what());
    }
}

// Automaton-producing commands print the canonical text, or write it to
// --output and report the path instead.
int emit_automaton(const std::string& command, const std::string& text,
                   const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
    } else {
        write_file(out_path, text);
        Report r;
        r.add("command", command);
        r.add("output", out_path);
        r.write(out);
    }
    return kExitOk;
}

int report_search(const std::string& command, const FuzzyAutomaton& f,
                  const DirectabilityReport& result, std::ostream& out) {
    Report r;
    r.add("command", command);
    r.add("mode", std::string(to_string(result.mode)));
    r.add("result", result.directable);
    if (result.witness) {
        r.add("witness", format_word(f, *result.witness));
        r.add("length", static_cast<long long>(result.witness->size()));
    }
    r.add("explored", static_cast<long long>(result.explored));
    r.add("truncated", result.truncated);
    r.write(out);
    return result.truncated ? kExitCapExceeded : kExitOk;
}

struct CommonArgs {
    std::string file;
    std::string mode = "d3";
    std::string word;
    std::string tau;
    std::string out_path;
    long cap = kDefaultStateCap;
    long long budget = kDefaultWordBudget;
    int max_len = 0;
};

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"directability analysis of fuzzy and nondeterministic automata"};
    app.name("dirfuzz");
    app.require_subcommand(1);

    CommonArgs a;
    std::string file2, partition_text, states_text;
    std::uint64_t seed = 0;
    int rand_states = 1, rand_letters = 1;
    std::string density = "1/2";
    bool complete = false;

    auto* validate_cmd = app.add_subcommand("validate", "report invariant violations");
    validate_cmd->add_option("file", a.file)->required();

    auto* tonfa = app.add_subcommand("to-nfa", "associated NFA of a fuzzy automaton");
    tonfa->add_option("file", a.file)->required();
    tonfa->add_option("-o,--output", a.out_path, "write to a file instead of stdout");

    auto* check = app.add_subcommand("check-word", "is a word D1/D2/D3-directing");
    check->add_option("file", a.file)->required();
    check->add_option("--mode", a.mode)->required();
    check->add_option("--word", a.word, "space-separated letters, or eps")->required();
    check->add_option("--tau", a.tau, "threshold cut (fuzzy input only)");

    auto* directable = app.add_subcommand("directable", "decide directability");
    directable->add_option("file", a.file)->required();
    directable->add_option("--mode", a.mode)->required();
    directable->add_option("--cap", a.cap, "configuration-state cap");

    auto* shortest = app.add_subcommand("shortest", "shortest directing word");
    shortest->add_option("file", a.file)->required();
    shortest->add_option("--mode", a.mode)->required();
    shortest->add_option("--cap", a.cap, "configuration-state cap");

    auto* d3test = app.add_subcommand("d3-test", "pairwise-merge D3 test (complete automata)");
    d3test->add_option("file", a.file)->required();

    auto* product = app.add_subcommand("product", "direct product of two fuzzy automata");
    product->add_option("file1", a.file)->required();
    product->add_option("file2", file2)->required();
    product->add_option("-o,--output", a.out_path, "write to a file instead of stdout");

    auto* quotient_cmd = app.add_subcommand("quotient", "quotient by a congruence");
    quotient_cmd->add_option("file", a.file)->required();
    quotient_cmd->add_option("--partition", partition_text, "blocks 'a b|c' separated by |")->required();
    quotient_cmd->add_option("-o,--output", a.out_path, "write to a file instead of stdout");

    auto* sub = app.add_subcommand("subautomaton", "restrict to a closed state subset");
    sub->add_option("file", a.file)->required();
    sub->add_option("--states", states_text, "space-separated state names")->required();
    sub->add_option("-o,--output", a.out_path, "write to a file instead of stdout");

    auto* oracle = app.add_subcommand("oracle", "enumerate directing words up to a length");
    oracle->add_option("file", a.file)->required();
    oracle->add_option("--mode", a.mode)->required();
    oracle->add_option("--max-len", a.max_len)->required();
    oracle->add_option("--budget", a.budget, "word-count budget");

    auto* random_cmd = app.add_subcommand("random", "seeded random fuzzy automaton");
    random_cmd->add_option("--seed", seed)->required();
    random_cmd->add_option("--states", rand_states)->required();
    random_cmd->add_option("--letters", rand_letters)->required();
    random_cmd->add_option("--density", density, "transition probability p/q");
    random_cmd->add_flag("--complete", complete, "force every row nonempty");
    random_cmd->add_option("-o,--output", a.out_path, "write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (validate_cmd->parsed()) {
        auto parsed = load(a.file);
        Report r;
        r.add("command", "validate");
        std::vector<std::string> violations;
        if (parsed.is_fuzzy()) violations = validate(parsed.fuzzy());
        r.add("result", violations.empty() ? "ok" : "invalid");
        for (const auto& v : violations) r.add("violation", v);
        r.write(out);
        return kExitOk;
    }

    if (tonfa->parsed())
        return emit_automaton("to-nfa", write_automaton(to_nfa(load_fuzzy(a.file))),
                              a.out_path, out);

    if (check->parsed()) {
        Mode mode = parse_mode(a.mode);
        auto parsed = load(a.file);
        Report r;
        r.add("command", "check-word");
        r.add("mode", std::string(to_string(mode)));
        bool result;
        if (parsed.is_fuzzy()) {
            const auto& f = parsed.fuzzy();
            Word w = parse_word(f, a.word);
            r.add("word", format_word(f, w));
            if (a.tau.empty()) {
                result = check_word(f, w, mode);
            } else {
                Rational tau = parse_ratio(a.tau, "threshold");
                if (tau < Rational(0) || tau >= Rational(1))
                    throw UsageError("threshold must satisfy 0 <= tau < 1");
                r.add("tau", format_rational(tau));
                result = check_word_tau(f, w, tau, mode);
            }
        } else {
            if (!a.tau.empty()) throw UsageError("--tau needs a fuzzy automaton");
            const auto& n = parsed.nfa();
            Word w = parse_word(n, a.word);
            r.add("word", format_word(n, w));
            result = check_word_nfa(n, w, mode);
        }
        r.add("result", result);
        r.write(out);
        return kExitOk;
    }

    if (directable->parsed() || shortest->parsed()) {
        const char* name = directable->parsed() ? "directable" : "shortest";
        FuzzyAutomaton f = load_fuzzy(a.file);
        return report_search(name, f, shortest_directing_word(f, parse_mode(a.mode), a.cap), out);
    }

    if (d3test->parsed()) {
        FuzzyAutomaton f = load_fuzzy(a.file);
        Report r;
        r.add("command", "d3-test");
        try {
            D3TestReport result = d3_directability_test(f);
            r.add("result", result.directable);
            r.add("pops", static_cast<long long>(result.pop_count));
            r.write(out);
            return kExitOk;
        } catch (const IncompleteError& e) {
            r.add("error", "incomplete");
            r.add("state", e.state);
            r.add("letter", e.letter);
            r.write(out);
            return kExitPrecondition;
        }
    }

    if (product->parsed()) {
        FuzzyAutomaton f = load_fuzzy(a.file);
        FuzzyAutomaton g = load_fuzzy(file2);
        try {
            return emit_automaton("product", write_automaton(direct_product(f, g)),
                                  a.out_path, out);
        } catch (const AlphabetMismatchError&) {
            Report r;
            r.add("command", "product");
            r.add("error", "alphabet-mismatch");
            r.write(out);
            return kExitPrecondition;
        }
    }

    if (quotient_cmd->parsed()) {
        FuzzyAutomaton f = load_fuzzy(a.file);
        Partition theta = parse_partition(f, partition_text);
        try {
            return emit_automaton("quotient", write_automaton(quotient(f, theta)),
                                  a.out_path, out);
        } catch (const NotCongruenceError& e) {
            Report r;
            r.add("command", "quotient");
            r.add("error", "not-congruence");
            r.add("state", e.a);
            r.add("state2", e.a2);
            r.add("letter", e.letter);
            r.add("block", e.block);
            r.write(out);
            return kExitPrecondition;
        }
    }

    if (sub->parsed()) {
        FuzzyAutomaton f = load_fuzzy(a.file);
        StateSet within(f.state_count());
        for (int s : parse_state_list(f, states_text)) within.set(s);
        try {
            return emit_automaton("subautomaton",
                                  write_automaton(induced_subautomaton(f, within)),
                                  a.out_path, out);
        } catch (const NotClosedError& e) {
            Report r;
            r.add("command", "subautomaton");
            r.add("error", "not-closed");
            r.add("state", e.state);
            r.add("letter", e.letter);
            r.add("escapes", e.escaped);
            r.write(out);
            return kExitPrecondition;
        } catch (const PreconditionError&) {
            Report r;
            r.add("command", "subautomaton");
            r.add("error", "empty-subset");
            r.write(out);
            return kExitPrecondition;
        }
    }

    if (oracle->parsed()) {
        Mode mode = parse_mode(a.mode);
        if (a.max_len < 0) throw UsageError("--max-len must be nonnegative");
        FuzzyAutomaton f = load_fuzzy(a.file);
        Report r;
        r.add("command", "oracle");
        r.add("mode", std::string(to_string(mode)));
        r.add("max-len", static_cast<long long>(a.max_len));
        try {
            auto words = brute_force_directing_words(f, mode, a.max_len, a.budget);
            r.add("count", static_cast<long long>(words.size()));
            for (const auto& w : words) r.add("word", format_word(f, w));
            r.write(out);
            return kExitOk;
        } catch (const BudgetExceededError&) {
            r.add("error", "budget-exceeded");
            r.write(out);
            return kExitCapExceeded;
        }
    }

    if (random_cmd->parsed()) {
        Rational d = parse_ratio(density, "density");
        try {
            FuzzyAutomaton f = random_automaton(seed, rand_states, rand_letters, d, complete);
            return emit_automaton("random", write_automaton(f), a.out_path, out);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }

    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

}  // namespace dirfuzz
