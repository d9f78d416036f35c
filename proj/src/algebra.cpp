#include "dirfuzz/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "dirfuzz/errors.hpp"

namespace dirfuzz {

namespace {

void require_same_alphabet(const std::vector<std::string>& a,
                           const std::vector<std::string>& b) {
    if (a != b) throw AlphabetMismatchError();
}

std::string block_name(const FuzzyAutomaton& f, const std::vector<int>& members) {
    std::string name = "[";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) name += ",";
        name += f.state_name(members[i]);
    }
    name += "]";
    return name;
}

// max{ f(a,x,b') | b' in block }.
Rational row_max_into(const FuzzyAutomaton& f, int a, int x, const std::vector<int>& block) {
    Rational best(0);
    for (int b : block) best = std::max(best, f.weight(a, x, b));
    return best;
}

// Witness for a failed congruence check, or nullopt.
struct CongruenceWitness {
    int a, a2, letter, block;
};
std::optional<CongruenceWitness> congruence_violation(const Partition& theta,
                                                      const FuzzyAutomaton& f) {
    const int m = f.letter_count();
    for (const auto& cls : theta.blocks()) {
        for (size_t i = 1; i < cls.size(); ++i) {
            // equality is transitive, so comparing against the block
            // representative covers all pairs
            int rep = cls[0], other = cls[i];
            for (int x = 0; x < m; ++x)
                for (int b = 0; b < theta.block_count(); ++b)
                    if (row_max_into(f, rep, x, theta.block(b)) !=
                        row_max_into(f, other, x, theta.block(b)))
                        return CongruenceWitness{rep, other, x, b};
        }
    }
    return std::nullopt;
}

}  // namespace

bool StateMap::is_surjective() const {
    std::vector<char> hit(target_count(), 0);
    for (int t : to)
        if (t >= 0 && t < target_count()) hit[t] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

StateMap StateMap::identity(const FuzzyAutomaton& f) {
    StateMap phi;
    phi.target_names = f.state_names();
    phi.to.resize(f.state_count());
    for (int a = 0; a < f.state_count(); ++a) phi.to[a] = a;
    return phi;
}

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)), block_of_(n, -1) {
    for (auto& cls : blocks_) {
        if (cls.empty()) throw std::invalid_argument("partition has an empty block");
        std::sort(cls.begin(), cls.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (size_t b = 0; b < blocks_.size(); ++b) {
        for (int s : blocks_[b]) {
            if (s < 0 || s >= n)
                throw std::invalid_argument("partition member out of range");
            if (block_of_[s] != -1)
                throw std::invalid_argument("partition blocks overlap");
            block_of_[s] = static_cast<int>(b);
        }
    }
    for (int s = 0; s < n; ++s)
        if (block_of_[s] == -1)
            throw std::invalid_argument("partition does not cover all states");
}

Partition Partition::discrete(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(n);
    for (int s = 0; s < n; ++s) blocks.push_back({s});
    return Partition(n, std::move(blocks));
}

Partition Partition::single_block(int n) {
    std::vector<int> all(n);
    for (int s = 0; s < n; ++s) all[s] = s;
    return Partition(n, {all});
}

bool is_subautomaton(const FuzzyAutomaton& sub, const FuzzyAutomaton& parent,
                     const StateMap& embedding) {
    require_same_alphabet(sub.letter_symbols(), parent.letter_symbols());
    if (embedding.source_count() != sub.state_count())
        throw std::invalid_argument("embedding domain does not match the subautomaton");
    std::vector<char> hit(parent.state_count(), 0);
    StateSet image(parent.state_count());
    for (int b : embedding.to) {
        if (b < 0 || b >= parent.state_count() || hit[b])
            throw std::invalid_argument("embedding is not injective into the parent");
        hit[b] = 1;
        image.set(b);
    }

    const int m = sub.letter_count();
    for (int b = 0; b < sub.state_count(); ++b) {
        for (int x = 0; x < m; ++x) {
            if (!parent.support(embedding.to[b], x).is_subset_of(image)) return false;
            for (int b2 = 0; b2 < sub.state_count(); ++b2)
                if (sub.weight(b, x, b2) != parent.weight(embedding.to[b], x, embedding.to[b2]))
                    return false;
        }
    }
    return true;
}

FuzzyAutomaton induced_subautomaton(const FuzzyAutomaton& f, const StateSet& within) {
    if (within.empty())
        throw PreconditionError("cannot induce a subautomaton on the empty set");
    const int m = f.letter_count();
    std::vector<int> members = within.to_vector();
    for (int b : members) {
        for (int x = 0; x < m; ++x) {
            const StateSet& reach = f.support(b, x);
            if (!reach.is_subset_of(within)) {
                int esc = -1;
                reach.for_each([&](int s) {
                    if (esc == -1 && !within.test(s)) esc = s;
                });
                throw NotClosedError(f.state_name(b), f.letter_symbol(x), f.state_name(esc));
            }
        }
    }

    std::vector<int> new_index(f.state_count(), -1);
    std::vector<std::string> names;
    for (int b : members) {
        new_index[b] = static_cast<int>(names.size());
        names.push_back(f.state_name(b));
    }
    std::vector<Transition> ts;
    for (const auto& t : f.transitions())
        if (within.test(t.from) && within.test(t.to))
            ts.push_back({new_index[t.from], t.letter, new_index[t.to], t.weight});
    return FuzzyAutomaton(std::move(names), f.letter_symbols(), std::move(ts));
}

bool is_homomorphism(const StateMap& phi, const FuzzyAutomaton& from,
                     const FuzzyAutomaton& to) {
    require_same_alphabet(from.letter_symbols(), to.letter_symbols());
    if (phi.source_count() != from.state_count() || phi.target_count() != to.state_count())
        throw std::invalid_argument("state map does not match the automata");

    const int m = from.letter_count();
    for (int a = 0; a < from.state_count(); ++a) {
        for (int x = 0; x < m; ++x) {
            for (int b = 0; b < to.state_count(); ++b) {
                Rational best(0);
                for (int a2 = 0; a2 < from.state_count(); ++a2)
                    if (phi.to[a2] == b) best = std::max(best, from.weight(a, x, a2));
                if (to.weight(phi.to[a], x, b) != best) return false;
            }
        }
    }
    return true;
}

bool is_congruence(const Partition& theta, const FuzzyAutomaton& f) {
    if (theta.element_count() != f.state_count())
        throw std::invalid_argument("partition does not match the state set");
    return !congruence_violation(theta, f).has_value();
}

FuzzyAutomaton quotient(const FuzzyAutomaton& f, const Partition& theta) {
    if (theta.element_count() != f.state_count())
        throw std::invalid_argument("partition does not match the state set");
    if (auto w = congruence_violation(theta, f))
        throw NotCongruenceError(f.state_name(w->a), f.state_name(w->a2),
                                 f.letter_symbol(w->letter),
                                 block_name(f, theta.block(w->block)));

    const int m = f.letter_count();
    std::vector<std::string> names;
    names.reserve(theta.block_count());
    for (const auto& cls : theta.blocks()) names.push_back(block_name(f, cls));

    std::vector<Transition> ts;
    for (int a = 0; a < theta.block_count(); ++a) {
        for (int x = 0; x < m; ++x) {
            for (int b = 0; b < theta.block_count(); ++b) {
                Rational best(0);
                for (int a2 : theta.block(a))
                    best = std::max(best, row_max_into(f, a2, x, theta.block(b)));
                if (best > Rational(0)) ts.push_back({a, x, b, best});
            }
        }
    }
    return FuzzyAutomaton(std::move(names), f.letter_symbols(), std::move(ts));
}

StateMap quotient_map(const FuzzyAutomaton& f, const Partition& theta) {
    StateMap phi;
    phi.to.resize(f.state_count());
    for (int a = 0; a < f.state_count(); ++a) phi.to[a] = theta.block_of(a);
    phi.target_names.reserve(theta.block_count());
    for (const auto& cls : theta.blocks()) phi.target_names.push_back(block_name(f, cls));
    return phi;
}

Partition kernel(const StateMap& phi) {
    std::vector<std::vector<int>> classes(phi.target_count());
    for (int a = 0; a < phi.source_count(); ++a) classes[phi.to[a]].push_back(a);
    std::vector<std::vector<int>> blocks;
    for (auto& cls : classes)
        if (!cls.empty()) blocks.push_back(std::move(cls));
    return Partition(phi.source_count(), std::move(blocks));
}

FuzzyAutomaton direct_product(const FuzzyAutomaton& f, const FuzzyAutomaton& g) {
    require_same_alphabet(f.letter_symbols(), g.letter_symbols());
    const int nb = g.state_count();

    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(f.state_count()) * nb);
    for (int a = 0; a < f.state_count(); ++a)
        for (int b = 0; b < nb; ++b)
            names.push_back("(" + f.state_name(a) + "," + g.state_name(b) + ")");

    // min(w1,w2) is positive exactly on pairs of positive transitions
    std::vector<Transition> ts;
    for (const auto& tf : f.transitions()) {
        if (tf.weight == Rational(0)) continue;
        for (const auto& tg : g.transitions()) {
            if (tg.letter != tf.letter || tg.weight == Rational(0)) continue;
            ts.push_back({tf.from * nb + tg.from, tf.letter, tf.to * nb + tg.to,
                          std::min(tf.weight, tg.weight)});
        }
    }
    return FuzzyAutomaton(std::move(names), f.letter_symbols(), std::move(ts));
}

FuzzyAutomaton epimorphic_image(const StateMap& phi, const FuzzyAutomaton& f) {
    if (phi.source_count() != f.state_count())
        throw std::invalid_argument("state map does not match the automaton");
    if (!phi.is_surjective())
        throw std::invalid_argument("state map is not surjective onto its codomain");

    Partition ker = kernel(phi);
    if (auto w = congruence_violation(ker, f))
        throw NotCongruenceError(f.state_name(w->a), f.state_name(w->a2),
                                 f.letter_symbol(w->letter),
                                 block_name(f, ker.block(w->block)));

    // g(p,x,q) = max{ f(rep_p, x, a') | a' phi = q }, independent of the
    // representative because ker phi is a congruence.
    const int m = f.letter_count();
    std::vector<int> rep(phi.target_count(), -1);
    for (int a = f.state_count() - 1; a >= 0; --a) rep[phi.to[a]] = a;

    std::vector<std::vector<int>> preimage(phi.target_count());
    for (int a = 0; a < f.state_count(); ++a) preimage[phi.to[a]].push_back(a);

    std::vector<Transition> ts;
    for (int p = 0; p < phi.target_count(); ++p) {
        for (int x = 0; x < m; ++x) {
            for (int q = 0; q < phi.target_count(); ++q) {
                Rational best = row_max_into(f, rep[p], x, preimage[q]);
                if (best > Rational(0)) ts.push_back({p, x, q, best});
            }
        }
    }
    return FuzzyAutomaton(phi.target_names, f.letter_symbols(), std::move(ts));
}

}  // namespace dirfuzz
