#ifndef DIRFUZZ_AUTOMATON_HPP
#define DIRFUZZ_AUTOMATON_HPP

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "dirfuzz/rational.hpp"
#include "dirfuzz/state_set.hpp"

namespace dirfuzz {

// A word is a sequence of letter indices; the empty vector is the empty word.
using Word = std::vector<int>;

struct Transition {
    int from = 0;
    int letter = 0;
    int to = 0;
    Rational weight;

    friend bool operator==(const Transition& a, const Transition& b) {
        return a.from == b.from && a.letter == b.letter && a.to == b.to &&
               a.weight == b.weight;
    }
};

// Max-min fuzzy automaton: states, alphabet, and a sparse transition map
// into (0,1]. Absent entries mean weight 0. Immutable after construction.
//
// The constructor accepts any data (including out-of-range indices or
// weights outside (0,1]) so that validate() can report violations; the
// analysis operations are meaningful only on automata validate() clears.
class FuzzyAutomaton {
public:
    FuzzyAutomaton(std::vector<std::string> state_names,
                   std::vector<std::string> letter_symbols,
                   std::vector<Transition> transitions);

    int state_count() const { return static_cast<int>(state_names_.size()); }
    int letter_count() const { return static_cast<int>(letter_symbols_.size()); }

    const std::vector<std::string>& state_names() const { return state_names_; }
    const std::vector<std::string>& letter_symbols() const { return letter_symbols_; }
    const std::string& state_name(int a) const { return state_names_[a]; }
    const std::string& letter_symbol(int x) const { return letter_symbols_[x]; }

    std::optional<int> state_index(std::string_view name) const;
    std::optional<int> letter_index(std::string_view symbol) const;

    // Sorted by (from, letter, to).
    const std::vector<Transition>& transitions() const { return transitions_; }

    // f(a,x,b); 0 when no entry is stored.
    Rational weight(int a, int x, int b) const;

    // States b with f(a,x,b) > 0.
    const StateSet& support(int a, int x) const { return support_[a * letter_count() + x]; }

    friend bool operator==(const FuzzyAutomaton& a, const FuzzyAutomaton& b) {
        return a.state_names_ == b.state_names_ &&
               a.letter_symbols_ == b.letter_symbols_ &&
               a.transitions_ == b.transitions_;
    }

private:
    std::vector<std::string> state_names_;
    std::vector<std::string> letter_symbols_;
    std::vector<Transition> transitions_;
    std::vector<StateSet> support_;
    std::unordered_map<std::string, int> state_lookup_;
    std::unordered_map<std::string, int> letter_lookup_;
};

// Nondeterministic automaton: one successor set per (state, letter) pair,
// possibly empty. The support skeleton of a fuzzy automaton.
class Nfa {
public:
    Nfa(std::vector<std::string> state_names,
        std::vector<std::string> letter_symbols,
        std::vector<StateSet> relation);  // relation.size() == n*m, indexed a*m+x

    Nfa(std::vector<std::string> state_names,
        std::vector<std::string> letter_symbols,
        const std::vector<std::tuple<int, int, int>>& edges);

    int state_count() const { return static_cast<int>(state_names_.size()); }
    int letter_count() const { return static_cast<int>(letter_symbols_.size()); }

    const std::vector<std::string>& state_names() const { return state_names_; }
    const std::vector<std::string>& letter_symbols() const { return letter_symbols_; }
    const std::string& state_name(int a) const { return state_names_[a]; }
    const std::string& letter_symbol(int x) const { return letter_symbols_[x]; }

    std::optional<int> state_index(std::string_view name) const;
    std::optional<int> letter_index(std::string_view symbol) const;

    const StateSet& successors(int a, int x) const { return relation_[a * letter_count() + x]; }

    friend bool operator==(const Nfa& a, const Nfa& b) {
        return a.state_names_ == b.state_names_ &&
               a.letter_symbols_ == b.letter_symbols_ && a.relation_ == b.relation_;
    }

private:
    std::vector<std::string> state_names_;
    std::vector<std::string> letter_symbols_;
    std::vector<StateSet> relation_;
    std::unordered_map<std::string, int> state_lookup_;
    std::unordered_map<std::string, int> letter_lookup_;
};

// Invariant violations as human-readable messages; empty iff well-formed.
std::vector<std::string> validate(const FuzzyAutomaton& f);

// {b | f(a,x,b) > 0}.
StateSet letter_support(const FuzzyAutomaton& f, int a, int x);

// F(H,w): iterated union of letter supports. step_set(f, H, eps) == H.
StateSet step_set(const FuzzyAutomaton& f, const StateSet& from, const Word& w);

// f*(a,w,b) under the max-min extension, computed by dynamic programming
// over prefixes (one weight per state), not by chain enumeration.
Rational extended_weight(const FuzzyAutomaton& f, int a, const Word& w, int b);

// The whole row f*(a,w,·) at once.
std::vector<Rational> extended_weight_row(const FuzzyAutomaton& f, int a, const Word& w);

// Associated NFA: same states and alphabet, relation = positivity support.
Nfa to_nfa(const FuzzyAutomaton& f);

// Hw under the inductive NFA extension.
StateSet nfa_step_set(const Nfa& n, const StateSet& from, const Word& w);

// Every (state, letter) pair has nonempty support.
bool is_complete(const FuzzyAutomaton& f);
bool is_complete(const Nfa& n);

// Witness (state, letter) with empty support, if any.
std::optional<std::pair<int, int>> incompleteness_witness(const FuzzyAutomaton& f);

}  // namespace dirfuzz

#endif
