#ifndef DIRFUZZ_DIRECTABILITY_HPP
#define DIRFUZZ_DIRECTABILITY_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dirfuzz/automaton.hpp"

namespace dirfuzz {

enum class Mode { D1, D2, D3 };

std::string_view to_string(Mode mode);
std::optional<Mode> mode_from_string(std::string_view text);

// One reachability set per start state: component i holds F(a_i, u) for the
// current prefix u. The transition function acts componentwise, so this
// vector is the deterministic recognizer state.
using Configuration = std::vector<StateSet>;

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const;
};

// ({a_0}, ..., {a_{n-1}}).
Configuration initial_configuration(int state_count);

Configuration advance_configuration(const FuzzyAutomaton& f, const Configuration& c, int letter);
Configuration advance_configuration(const Nfa& n, const Configuration& c, int letter);

// The mode's directing condition, evaluated on the per-start reach sets:
// D1 = all components one fixed singleton, D2 = all components equal,
// D3 = the components have a common state. Empty components fail D1 and D3
// and compare normally for D2.
bool configuration_directs(const Configuration& c, Mode mode);

// Does w satisfy the mode condition on F (resp. on the NFA)?
bool check_word(const FuzzyAutomaton& f, const Word& w, Mode mode);
bool check_word_nfa(const Nfa& n, const Word& w, Mode mode);

inline constexpr long kDefaultStateCap = 1'000'000;

// Deterministic recognizer over configuration states. State 0 is the
// initial configuration. Final flags are kept for all three modes; `mode`
// records what the recognizer was requested for. When `truncated` is set
// the closure hit the state cap and `next` holds -1 for unexplored edges.
struct DfaRecognizer {
    Mode mode = Mode::D3;
    int letter_count = 0;
    std::vector<Configuration> configs;
    std::vector<int> next;                 // configs.size() * letter_count
    std::vector<std::uint8_t> final_mask;  // bit 0: D1, bit 1: D2, bit 2: D3
    bool truncated = false;

    int initial() const { return 0; }
    bool is_final(int state, Mode m) const {
        return final_mask[state] & (1u << static_cast<int>(m));
    }
};

// Breadth-first closure of the configuration space from the initial
// configuration. If it completes under `state_cap` the recognizer accepts
// exactly the mode's directing-word language.
DfaRecognizer build_recognizer(const FuzzyAutomaton& f, Mode mode,
                               long state_cap = kDefaultStateCap);

// Deterministic run from the initial configuration. The recognizer must not
// be truncated (throws std::logic_error otherwise).
bool recognizer_accepts(const DfaRecognizer& r, const Word& w);
bool recognizer_accepts(const DfaRecognizer& r, const Word& w, Mode mode);

struct DirectabilityReport {
    Mode mode = Mode::D3;
    bool directable = false;
    std::optional<Word> witness;  // shortest, then lexicographically least
    long explored = 0;            // configurations discovered
    bool truncated = false;       // cap hit; directable=false then means "unknown"
};

// BFS over the configuration space. When the search exhausts the space
// without truncation, directable=false is exact: the language is empty.
DirectabilityReport shortest_directing_word(const FuzzyAutomaton& f, Mode mode,
                                            long state_cap = kDefaultStateCap);

inline constexpr long long kDefaultWordBudget = 10'000'000;

// All words of length <= max_len passing check_word, by direct enumeration
// in length-then-lexicographic order. Throws BudgetExceededError when the
// enumeration would visit more than `budget` words.
std::vector<Word> brute_force_directing_words(const FuzzyAutomaton& f, Mode mode,
                                              int max_len,
                                              long long budget = kDefaultWordBudget);

}  // namespace dirfuzz

#endif
