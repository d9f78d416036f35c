#ifndef DIRFUZZ_TESTS_FIXTURES_HPP
#define DIRFUZZ_TESTS_FIXTURES_HPP

#include <string>

#include "dirfuzz/automaton.hpp"

// In-code copies of the bundled demo automata (tests/fixtures/*.fza).
// States and letters are indexed in declaration order.
namespace fixtures {

using dirfuzz::FuzzyAutomaton;
using dirfuzz::Rational;
using dirfuzz::Transition;

// The running demo: three states a,b,c over {x,y}, fractional weights,
// incomplete (a and c have no y-successor). xx is D3-directing but neither
// D1- nor D2-directing, and appending or prepending letters can break it.
inline FuzzyAutomaton demo3() {
    return FuzzyAutomaton({"a", "b", "c"}, {"x", "y"},
                          {{0, 0, 1, Rational(3, 10)},
                           {1, 0, 2, Rational(2, 5)},
                           {2, 0, 1, Rational(1, 5)},
                           {2, 0, 2, Rational(3, 5)},
                           {1, 1, 1, Rational(1, 2)},
                           {1, 1, 2, Rational(1, 10)}});
}

// Every pair of states has a merging word, yet no D3-directing word
// exists: each letter strands one starting state.
inline FuzzyAutomaton merge_trap() {
    return FuzzyAutomaton({"a", "b", "c"}, {"x", "y", "z"},
                          {{0, 0, 0, Rational(1)},
                           {1, 0, 0, Rational(1)},
                           {1, 1, 1, Rational(1)},
                           {2, 1, 1, Rational(1)},
                           {0, 2, 2, Rational(1)},
                           {2, 2, 2, Rational(1)}});
}

// One-letter chain a -> b -> c onto a sink loop; complete, and xx funnels
// every state into c.
inline FuzzyAutomaton chain_funnel() {
    return FuzzyAutomaton({"a", "b", "c"}, {"x"},
                          {{0, 0, 1, Rational(1)},
                           {1, 0, 2, Rational(1)},
                           {2, 0, 2, Rational(1)}});
}

// Complete, D1-directable factor pair whose direct product has no
// D1-directing word.
inline FuzzyAutomaton d1drop_left() {
    return FuzzyAutomaton({"a", "b"}, {"x", "y"},
                          {{0, 0, 1, Rational(1)},
                           {1, 0, 1, Rational(1)},
                           {0, 1, 0, Rational(1)},
                           {1, 1, 0, Rational(1)},
                           {1, 1, 1, Rational(1)}});
}

inline FuzzyAutomaton d1drop_right() {
    return FuzzyAutomaton({"1", "2"}, {"x", "y"},
                          {{0, 0, 0, Rational(1)},
                           {1, 0, 0, Rational(1)},
                           {1, 0, 1, Rational(1)},
                           {0, 1, 1, Rational(1)},
                           {1, 1, 1, Rational(1)}});
}

// Incomplete D2- and D3-directable factor pair whose direct product has
// neither D2- nor D3-directing words.
inline FuzzyAutomaton d2drop_left() {
    return FuzzyAutomaton({"a", "b"}, {"x", "y"},
                          {{0, 0, 1, Rational(1)},
                           {1, 0, 1, Rational(1)},
                           {1, 1, 1, Rational(1)}});
}

inline FuzzyAutomaton d2drop_right() {
    return FuzzyAutomaton({"1", "2"}, {"x", "y"},
                          {{0, 1, 1, Rational(1)},
                           {1, 1, 1, Rational(1)},
                           {1, 0, 1, Rational(1)}});
}

inline FuzzyAutomaton single_state() {
    return FuzzyAutomaton({"s"}, {"x"}, {{0, 0, 0, Rational(1)}});
}

// Two disjoint sink loops; no pair of distinct states ever merges.
inline FuzzyAutomaton two_sinks() {
    return FuzzyAutomaton({"p", "q"}, {"x"},
                          {{0, 0, 0, Rational(1)}, {1, 0, 1, Rational(1)}});
}

inline std::string fixture_path(const std::string& name) {
    return std::string(DIRFUZZ_FIXTURE_DIR) + "/" + name;
}

}  // namespace fixtures

#endif
