#ifndef DIRFUZZ_IO_HPP
#define DIRFUZZ_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "dirfuzz/automaton.hpp"

namespace dirfuzz {

// Result of parsing an automaton file ("fza v1" or "nfa v1" header).
struct ParsedAutomaton {
    std::variant<FuzzyAutomaton, Nfa> value;

    bool is_fuzzy() const { return std::holds_alternative<FuzzyAutomaton>(value); }
    const FuzzyAutomaton& fuzzy() const { return std::get<FuzzyAutomaton>(value); }
    const Nfa& nfa() const { return std::get<Nfa>(value); }
};

// Grammar (UTF-8, LF, '#' starts a comment):
//   line 1: "fza v1" | "nfa v1"
//   line 2: "states: <name> ..."
//   line 3: "alphabet: <symbol> ..."
//   then one transition per line:
//     fuzzy: "<from> <letter> <to> <weight>"  with weight "0.3" or "3/10"
//     nfa:   "<from> <letter> <to>"
// Throws ParseError with a 1-based line number.
ParsedAutomaton parse_automaton(std::string_view text);

// Canonical text: declaration order preserved, transitions sorted by
// (from, letter, to), weights as reduced fractions. parse(write(a)) == a.
std::string write_automaton(const FuzzyAutomaton& f);
std::string write_automaton(const Nfa& n);

}  // namespace dirfuzz

#endif
