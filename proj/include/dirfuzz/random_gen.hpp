#ifndef DIRFUZZ_RANDOM_GEN_HPP
#define DIRFUZZ_RANDOM_GEN_HPP

#include <cstdint>

#include "dirfuzz/automaton.hpp"

namespace dirfuzz {

// Seeded random fuzzy automaton for fuzzing and experiments; a pure
// function of its arguments (mt19937_64 raw output only, so the sequence
// is identical on every platform). Each (a,x,b) transition is present
// independently with probability `density`, weighted uniformly from the
// grid {1/8, ..., 8/8}. With complete=true every empty (a,x) row gets one
// forced transition to a seed-chosen state. States are named q0..q{n-1},
// letters x0..x{m-1}.
FuzzyAutomaton random_automaton(std::uint64_t seed, int n, int m,
                                const Rational& density, bool complete);

}  // namespace dirfuzz

#endif
