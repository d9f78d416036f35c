#ifndef DIRFUZZ_ALGEBRA_HPP
#define DIRFUZZ_ALGEBRA_HPP

#include <string>
#include <vector>

#include "dirfuzz/automaton.hpp"

namespace dirfuzz {

// Total map from the states of a source automaton into a named codomain.
struct StateMap {
    std::vector<int> to;                    // source index -> target index
    std::vector<std::string> target_names;  // one per target state

    int source_count() const { return static_cast<int>(to.size()); }
    int target_count() const { return static_cast<int>(target_names.size()); }
    bool is_surjective() const;

    static StateMap identity(const FuzzyAutomaton& f);
};

// Equivalence relation on 0..n-1 as disjoint nonempty blocks covering all
// states. Blocks are ordered by smallest member; members ascend.
class Partition {
public:
    Partition(int n, std::vector<std::vector<int>> blocks);  // throws std::invalid_argument

    static Partition discrete(int n);
    static Partition single_block(int n);

    int element_count() const { return static_cast<int>(block_of_.size()); }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int b) const { return blocks_[b]; }
    int block_of(int s) const { return block_of_[s]; }
    bool same_block(int a, int b) const { return block_of_[a] == block_of_[b]; }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.blocks_ == b.blocks_;
    }

private:
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

// Is `sub` (via the injective embedding) a subautomaton of `parent`:
// the embedded state set closed under all letter supports, with weights
// agreeing on it. Throws AlphabetMismatchError / std::invalid_argument on
// malformed queries.
bool is_subautomaton(const FuzzyAutomaton& sub, const FuzzyAutomaton& parent,
                     const StateMap& embedding);

// Restriction of f to B x X x B. B must be nonempty and closed under every
// letter support (throws NotClosedError with a witness otherwise). States
// keep their names, ordered by ascending original index.
FuzzyAutomaton induced_subautomaton(const FuzzyAutomaton& f, const StateSet& within);

// g(a phi, x, b) = max{ f(a,x,a') | a' phi = b } for all a, x, b (max over
// the empty preimage is 0).
bool is_homomorphism(const StateMap& phi, const FuzzyAutomaton& from,
                     const FuzzyAutomaton& to);

// For every related pair and every letter, the row maxima into each block
// agree.
bool is_congruence(const Partition& theta, const FuzzyAutomaton& f);

// Quotient automaton on the blocks, f([a],x,[b]) = max over the classes.
// Requires is_congruence (throws NotCongruenceError with a witness).
// Block states are named "[m1,m2,...]" from their members.
FuzzyAutomaton quotient(const FuzzyAutomaton& f, const Partition& theta);

// The canonical map a -> [a] onto the quotient's states.
StateMap quotient_map(const FuzzyAutomaton& f, const Partition& theta);

// Preimage classes of phi.
Partition kernel(const StateMap& phi);

// Automaton on A x B with min-combined weights; pair states are named
// "(p,q)". Requires equal alphabets.
FuzzyAutomaton direct_product(const FuzzyAutomaton& f, const FuzzyAutomaton& g);

// The homomorphic image of f along a surjective phi whose kernel is a
// congruence; states take phi's target names. Throws std::invalid_argument
// when phi is not surjective, NotCongruenceError when no image exists.
FuzzyAutomaton epimorphic_image(const StateMap& phi, const FuzzyAutomaton& f);

}  // namespace dirfuzz

#endif
