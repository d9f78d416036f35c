#ifndef DIRFUZZ_THRESHOLD_HPP
#define DIRFUZZ_THRESHOLD_HPP

#include "dirfuzz/automaton.hpp"
#include "dirfuzz/directability.hpp"

namespace dirfuzz {

// NFA keeping exactly the transitions with weight strictly above tau.
// Requires 0 <= tau < 1 (throws std::invalid_argument).
Nfa tau_cut(const FuzzyAutomaton& f, const Rational& tau);

// F_tau(a,w) = { b | f*(a,w,b) > tau }, on the extended max-min weights.
StateSet tau_reachable(const FuzzyAutomaton& f, int a, const Word& w, const Rational& tau);

// The mode's directing condition evaluated on the tau-cut reach sets.
// Agrees with check_word_nfa on tau_cut(f, tau); the two routes are kept
// separate deliberately.
bool check_word_tau(const FuzzyAutomaton& f, const Word& w, const Rational& tau, Mode mode);

}  // namespace dirfuzz

#endif
