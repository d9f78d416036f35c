#include "dirfuzz/threshold.hpp"

#include <stdexcept>

namespace dirfuzz {

namespace {

void require_threshold(const Rational& tau) {
    if (tau < Rational(0) || tau >= Rational(1))
        throw std::invalid_argument("threshold must satisfy 0 <= tau < 1");
}

}  // namespace

Nfa tau_cut(const FuzzyAutomaton& f, const Rational& tau) {
    require_threshold(tau);
    const int n = f.state_count();
    const int m = f.letter_count();
    std::vector<StateSet> relation(static_cast<size_t>(n) * m, StateSet(n));
    for (const auto& t : f.transitions())
        if (t.weight > tau) relation[t.from * m + t.letter].set(t.to);
    return Nfa(f.state_names(), f.letter_symbols(), std::move(relation));
}

StateSet tau_reachable(const FuzzyAutomaton& f, int a, const Word& w, const Rational& tau) {
    require_threshold(tau);
    std::vector<Rational> row = extended_weight_row(f, a, w);
    StateSet out(f.state_count());
    for (int b = 0; b < f.state_count(); ++b)
        if (row[b] > tau) out.set(b);
    return out;
}

bool check_word_tau(const FuzzyAutomaton& f, const Word& w, const Rational& tau, Mode mode) {
    require_threshold(tau);
    Configuration c;
    c.reserve(f.state_count());
    for (int a = 0; a < f.state_count(); ++a)
        c.push_back(tau_reachable(f, a, w, tau));
    return configuration_directs(c, mode);
}

}  // namespace dirfuzz
