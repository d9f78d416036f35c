#include "dirfuzz/automaton.hpp"

#include <algorithm>
#include <cctype>

namespace dirfuzz {

namespace {

bool has_whitespace(const std::string& s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

std::unordered_map<std::string, int> make_lookup(const std::vector<std::string>& names) {
    std::unordered_map<std::string, int> m;
    for (size_t i = 0; i < names.size(); ++i)
        m.emplace(names[i], static_cast<int>(i));  // first wins on duplicates
    return m;
}

bool transition_key_less(const Transition& a, const Transition& b) {
    return std::tie(a.from, a.letter, a.to) < std::tie(b.from, b.letter, b.to);
}

}  // namespace

FuzzyAutomaton::FuzzyAutomaton(std::vector<std::string> state_names,
                               std::vector<std::string> letter_symbols,
                               std::vector<Transition> transitions)
    : state_names_(std::move(state_names)),
      letter_symbols_(std::move(letter_symbols)),
      transitions_(std::move(transitions)) {
    std::stable_sort(transitions_.begin(), transitions_.end(), transition_key_less);
    state_lookup_ = make_lookup(state_names_);
    letter_lookup_ = make_lookup(letter_symbols_);

    const int n = state_count();
    const int m = letter_count();
    support_.assign(static_cast<size_t>(n) * m, StateSet(n));
    for (const auto& t : transitions_) {
        if (t.from < 0 || t.from >= n || t.letter < 0 || t.letter >= m ||
            t.to < 0 || t.to >= n)
            continue;  // validate() reports these
        if (t.weight > Rational(0)) support_[t.from * m + t.letter].set(t.to);
    }
}

std::optional<int> FuzzyAutomaton::state_index(std::string_view name) const {
    auto it = state_lookup_.find(std::string(name));
    if (it == state_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> FuzzyAutomaton::letter_index(std::string_view symbol) const {
    auto it = letter_lookup_.find(std::string(symbol));
    if (it == letter_lookup_.end()) return std::nullopt;
    return it->second;
}

Rational FuzzyAutomaton::weight(int a, int x, int b) const {
    Transition key{a, x, b, Rational(0)};
    auto it = std::lower_bound(transitions_.begin(), transitions_.end(), key,
                               transition_key_less);
    if (it != transitions_.end() && it->from == a && it->letter == x && it->to == b)
        return it->weight;
    return Rational(0);
}

Nfa::Nfa(std::vector<std::string> state_names,
         std::vector<std::string> letter_symbols, std::vector<StateSet> relation)
    : state_names_(std::move(state_names)),
      letter_symbols_(std::move(letter_symbols)),
      relation_(std::move(relation)) {
    state_lookup_ = make_lookup(state_names_);
    letter_lookup_ = make_lookup(letter_symbols_);
}

Nfa::Nfa(std::vector<std::string> state_names,
         std::vector<std::string> letter_symbols,
         const std::vector<std::tuple<int, int, int>>& edges)
    : state_names_(std::move(state_names)),
      letter_symbols_(std::move(letter_symbols)) {
    const int n = state_count();
    const int m = letter_count();
    relation_.assign(static_cast<size_t>(n) * m, StateSet(n));
    for (const auto& [from, letter, to] : edges) relation_[from * m + letter].set(to);
    state_lookup_ = make_lookup(state_names_);
    letter_lookup_ = make_lookup(letter_symbols_);
}

std::optional<int> Nfa::state_index(std::string_view name) const {
    auto it = state_lookup_.find(std::string(name));
    if (it == state_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Nfa::letter_index(std::string_view symbol) const {
    auto it = letter_lookup_.find(std::string(symbol));
    if (it == letter_lookup_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> validate(const FuzzyAutomaton& f) {
    std::vector<std::string> out;
    const int n = f.state_count();
    const int m = f.letter_count();

    if (n == 0) out.push_back("state set is empty");
    if (m == 0) out.push_back("alphabet is empty");

    auto check_names = [&out](const std::vector<std::string>& names, const char* kind) {
        std::unordered_map<std::string, int> seen;
        for (size_t i = 0; i < names.size(); ++i) {
            const auto& name = names[i];
            if (name.empty())
                out.push_back(std::string(kind) + " " + std::to_string(i) + " has empty name");
            else if (has_whitespace(name))
                out.push_back(std::string(kind) + " name '" + name + "' contains whitespace");
            auto [it, fresh] = seen.emplace(name, static_cast<int>(i));
            if (!fresh)
                out.push_back("duplicate " + std::string(kind) + " name '" + name + "'");
        }
    };
    check_names(f.state_names(), "state");
    check_names(f.letter_symbols(), "letter");

    const auto& ts = f.transitions();
    for (size_t i = 0; i < ts.size(); ++i) {
        const auto& t = ts[i];
        std::string where = "transition " + std::to_string(i);
        if (t.from < 0 || t.from >= n) out.push_back(where + ": unknown state index " + std::to_string(t.from));
        if (t.to < 0 || t.to >= n) out.push_back(where + ": unknown state index " + std::to_string(t.to));
        if (t.letter < 0 || t.letter >= m) out.push_back(where + ": unknown letter index " + std::to_string(t.letter));
        if (t.weight == Rational(0))
            out.push_back(where + ": zero weight stored");
        else if (t.weight < Rational(0) || t.weight > Rational(1))
            out.push_back(where + ": weight " + format_rational(t.weight) + " outside (0,1]");
        if (i > 0 && ts[i - 1].from == t.from && ts[i - 1].letter == t.letter && ts[i - 1].to == t.to)
            out.push_back(where + ": duplicate transition key");
    }
    return out;
}

StateSet letter_support(const FuzzyAutomaton& f, int a, int x) {
    return f.support(a, x);
}

StateSet step_set(const FuzzyAutomaton& f, const StateSet& from, const Word& w) {
    StateSet cur = from;
    for (int x : w) {
        StateSet next(f.state_count());
        cur.for_each([&](int a) { next |= f.support(a, x); });
        cur = next;
    }
    return cur;
}

std::vector<Rational> extended_weight_row(const FuzzyAutomaton& f, int a, const Word& w) {
    const int n = f.state_count();
    std::vector<Rational> cur(n, Rational(0));
    cur[a] = Rational(1);
    for (int x : w) {
        std::vector<Rational> next(n, Rational(0));
        for (int c = 0; c < n; ++c) {
            if (cur[c] == Rational(0)) continue;
            f.support(c, x).for_each([&](int b) {
                Rational v = std::min(cur[c], f.weight(c, x, b));
                if (v > next[b]) next[b] = v;
            });
        }
        cur = std::move(next);
    }
    return cur;
}

Rational extended_weight(const FuzzyAutomaton& f, int a, const Word& w, int b) {
    return extended_weight_row(f, a, w)[b];
}

Nfa to_nfa(const FuzzyAutomaton& f) {
    const int n = f.state_count();
    const int m = f.letter_count();
    std::vector<StateSet> relation;
    relation.reserve(static_cast<size_t>(n) * m);
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < m; ++x) relation.push_back(f.support(a, x));
    return Nfa(f.state_names(), f.letter_symbols(), std::move(relation));
}

StateSet nfa_step_set(const Nfa& nfa, const StateSet& from, const Word& w) {
    StateSet cur = from;
    for (int x : w) {
        StateSet next(nfa.state_count());
        cur.for_each([&](int a) { next |= nfa.successors(a, x); });
        cur = next;
    }
    return cur;
}

bool is_complete(const FuzzyAutomaton& f) {
    return !incompleteness_witness(f).has_value();
}

bool is_complete(const Nfa& nfa) {
    for (int a = 0; a < nfa.state_count(); ++a)
        for (int x = 0; x < nfa.letter_count(); ++x)
            if (nfa.successors(a, x).empty()) return false;
    return true;
}

std::optional<std::pair<int, int>> incompleteness_witness(const FuzzyAutomaton& f) {
    for (int a = 0; a < f.state_count(); ++a)
        for (int x = 0; x < f.letter_count(); ++x)
            if (f.support(a, x).empty()) return std::make_pair(a, x);
    return std::nullopt;
}

}  // namespace dirfuzz
