#ifndef DIRFUZZ_MERGETEST_HPP
#define DIRFUZZ_MERGETEST_HPP

#include <cstdint>
#include <vector>

#include "dirfuzz/automaton.hpp"

namespace dirfuzz {

// I[a,x] = { i | a is in F(i,x) }.
struct InvertedTable {
    int state_count = 0;
    int letter_count = 0;
    std::vector<StateSet> table;  // indexed a * letter_count + x

    const StateSet& at(int a, int x) const { return table[a * letter_count + x]; }
};

InvertedTable inverted_table(const FuzzyAutomaton& f);

// F(a,w) and F(b,w) intersect.
bool d3_merges(const FuzzyAutomaton& f, const Word& w, int a, int b);

// Reflexive symmetric relation of state pairs D3-merged by a word of
// length <= k.
struct MuRelation {
    int k = 0;
    std::vector<StateSet> rows;  // rows[a].test(b)

    bool related(int a, int b) const { return rows[a].test(b); }
    bool is_full() const;
    bool same_pairs(const MuRelation& o) const { return rows == o.rows; }
};

// mu(k) by the recurrence: mu(0) is the diagonal; (a,b) joins at step k
// when some letter x gives (F(a,x) x F(b,x)) meeting mu(k-1).
MuRelation mu(const FuzzyAutomaton& f, int k);

// The limit of the mu chain; iterates until mu(k) = mu(k-1) and reports
// that first k. Well-defined for incomplete automata too, where it answers
// mergeability only, not directability.
MuRelation mergeability_closure(const FuzzyAutomaton& f);

// Strictly-upper-triangular Boolean matrix over state pairs i < j.
struct MergeMatrix {
    int n = 0;
    std::vector<std::uint8_t> cells;  // row-major upper triangle

    explicit MergeMatrix(int n_ = 0) : n(n_), cells(n_ > 1 ? n_ * (n_ - 1) / 2 : 0, 0) {}
    std::size_t offset(int i, int j) const {  // requires i < j
        return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 + (j - i - 1);
    }
    bool get(int i, int j) const { return cells[offset(i, j)] != 0; }
    void set(int i, int j) { cells[offset(i, j)] = 1; }
    bool all_set() const;
};

struct D3TestReport {
    bool directable = false;
    int pop_count = 0;  // worklist removals; at most n(n-1)/2
    MergeMatrix matrix;
};

// The four-step worklist algorithm over the inverted table. Requires a
// complete automaton (throws IncompleteError with a witness otherwise):
// pairwise mergeability does not imply D3-directability for incomplete
// automata.
D3TestReport d3_directability_test(const FuzzyAutomaton& f);

}  // namespace dirfuzz

#endif
