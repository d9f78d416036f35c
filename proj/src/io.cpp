#include "dirfuzz/io.hpp"

#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "dirfuzz/errors.hpp"

namespace dirfuzz {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

struct Line {
    int number;  // 1-based physical line
    std::vector<std::string> tokens;
};

std::vector<Line> logical_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        auto tokens = tokenize(raw);
        if (!tokens.empty()) out.push_back({number, std::move(tokens)});
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

std::vector<std::string> parse_declaration(const Line& line, const std::string& keyword) {
    if (line.tokens.empty() || line.tokens[0] != keyword + ":")
        throw ParseError(line.number, "expected '" + keyword + ":' declaration");
    std::vector<std::string> names(line.tokens.begin() + 1, line.tokens.end());
    if (names.empty())
        throw ParseError(line.number, keyword + " declaration is empty");
    std::set<std::string> seen;
    for (const auto& name : names)
        if (!seen.insert(name).second)
            throw ParseError(line.number, "duplicate name '" + name + "' in " + keyword);
    return names;
}

}  // namespace

ParsedAutomaton parse_automaton(std::string_view text) {
    auto lines = logical_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input");

    const auto& header = lines[0];
    bool fuzzy;
    if (header.tokens == std::vector<std::string>{"fza", "v1"})
        fuzzy = true;
    else if (header.tokens == std::vector<std::string>{"nfa", "v1"})
        fuzzy = false;
    else
        throw ParseError(header.number, "header must be 'fza v1' or 'nfa v1'");

    if (lines.size() < 3) throw ParseError(lines.back().number, "missing declarations");
    auto states = parse_declaration(lines[1], "states");
    auto letters = parse_declaration(lines[2], "alphabet");

    std::unordered_map<std::string, int> state_of, letter_of;
    for (size_t i = 0; i < states.size(); ++i) state_of[states[i]] = static_cast<int>(i);
    for (size_t i = 0; i < letters.size(); ++i) letter_of[letters[i]] = static_cast<int>(i);

    auto lookup = [](const std::unordered_map<std::string, int>& table,
                     const std::string& name, const char* kind, int line) {
        auto it = table.find(name);
        if (it == table.end())
            throw ParseError(line, std::string("unknown ") + kind + " '" + name + "'");
        return it->second;
    };

    std::set<std::tuple<int, int, int>> seen;
    auto note_key = [&seen](int from, int letter, int to, int line) {
        if (!seen.insert({from, letter, to}).second)
            throw ParseError(line, "duplicate transition");
    };

    if (fuzzy) {
        std::vector<Transition> ts;
        for (size_t i = 3; i < lines.size(); ++i) {
            const auto& line = lines[i];
            if (line.tokens.size() != 4)
                throw ParseError(line.number, "expected '<from> <letter> <to> <weight>'");
            int from = lookup(state_of, line.tokens[0], "state", line.number);
            int letter = lookup(letter_of, line.tokens[1], "letter", line.number);
            int to = lookup(state_of, line.tokens[2], "state", line.number);
            auto weight = parse_rational(line.tokens[3]);
            if (!weight)
                throw ParseError(line.number, "malformed weight '" + line.tokens[3] + "'");
            if (*weight <= Rational(0) || *weight > Rational(1))
                throw ParseError(line.number,
                                 "weight " + line.tokens[3] + " outside (0,1]");
            note_key(from, letter, to, line.number);
            ts.push_back({from, letter, to, *weight});
        }
        return ParsedAutomaton{FuzzyAutomaton(std::move(states), std::move(letters), std::move(ts))};
    }

    std::vector<std::tuple<int, int, int>> edges;
    for (size_t i = 3; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 3)
            throw ParseError(line.number, "expected '<from> <letter> <to>'");
        int from = lookup(state_of, line.tokens[0], "state", line.number);
        int letter = lookup(letter_of, line.tokens[1], "letter", line.number);
        int to = lookup(state_of, line.tokens[2], "state", line.number);
        note_key(from, letter, to, line.number);
        edges.emplace_back(from, letter, to);
    }
    return ParsedAutomaton{Nfa(std::move(states), std::move(letters), edges)};
}

namespace {

void write_declarations(std::ostringstream& out, const std::vector<std::string>& states,
                        const std::vector<std::string>& letters) {
    out << "states:";
    for (const auto& s : states) out << " " << s;
    out << "\nalphabet:";
    for (const auto& x : letters) out << " " << x;
    out << "\n";
}

}  // namespace

std::string write_automaton(const FuzzyAutomaton& f) {
    std::ostringstream out;
    out << "fza v1\n";
    write_declarations(out, f.state_names(), f.letter_symbols());
    for (const auto& t : f.transitions())
        out << f.state_name(t.from) << " " << f.letter_symbol(t.letter) << " "
            << f.state_name(t.to) << " " << format_rational(t.weight) << "\n";
    return out.str();
}

std::string write_automaton(const Nfa& nfa) {
    std::ostringstream out;
    out << "nfa v1\n";
    write_declarations(out, nfa.state_names(), nfa.letter_symbols());
    for (int a = 0; a < nfa.state_count(); ++a)
        for (int x = 0; x < nfa.letter_count(); ++x)
            nfa.successors(a, x).for_each([&](int b) {
                out << nfa.state_name(a) << " " << nfa.letter_symbol(x) << " "
                    << nfa.state_name(b) << "\n";
            });
    return out.str();
}

}  // namespace dirfuzz
