#include <doctest.h>

#include <stdexcept>

#include "dirfuzz/random_gen.hpp"
#include "dirfuzz/threshold.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace dirfuzz;

namespace {

StateSet set_of(int universe, std::initializer_list<int> members) {
    StateSet s(universe);
    for (int m : members) s.set(m);
    return s;
}

}  // namespace

TEST_CASE("tau_cut keeps exactly the strictly heavier transitions") {
    auto f = fixtures::demo3();
    SUBCASE("cut at zero is the support skeleton") {
        CHECK(tau_cut(f, Rational(0)) == to_nfa(f));
    }
    SUBCASE("cut at 1/4 drops the 1/5 and 1/10 transitions") {
        Nfa n = tau_cut(f, Rational(1, 4));
        CHECK(n.successors(0, 0) == set_of(3, {1}));  // a-x
        CHECK(n.successors(1, 0) == set_of(3, {2}));  // b-x
        CHECK(n.successors(2, 0) == set_of(3, {2}));  // c-x, 1/5 gone
        CHECK(n.successors(1, 1) == set_of(3, {1}));  // b-y, 1/10 gone
        CHECK(n.successors(0, 1) == set_of(3, {}));
        CHECK(n.successors(2, 1) == set_of(3, {}));
    }
    SUBCASE("cut above the maximum weight empties every relation") {
        Nfa n = tau_cut(f, Rational(7, 10));
        for (int a = 0; a < 3; ++a)
            for (int x = 0; x < 2; ++x) CHECK(n.successors(a, x).empty());
    }
    SUBCASE("boundary weights are dropped, not kept") {
        Nfa n = tau_cut(f, Rational(3, 10));
        CHECK(n.successors(0, 0).empty());  // a-x-b weighs exactly 3/10
    }
    SUBCASE("thresholds outside [0,1) are rejected") {
        CHECK_THROWS_AS(tau_cut(f, Rational(1)), std::invalid_argument);
        CHECK_THROWS_AS(tau_cut(f, Rational(-1, 2)), std::invalid_argument);
    }
}

TEST_CASE("threshold word checks on demo3") {
    auto f = fixtures::demo3();
    Word xx{0, 0};
    CHECK(check_word_tau(f, xx, Rational(1, 4), Mode::D3));
    // 3/10 <= 7/20 disconnects a entirely
    CHECK_FALSE(check_word_tau(f, xx, Rational(7, 20), Mode::D3));
    CHECK(tau_reachable(f, 0, xx, Rational(7, 20)).empty());
}

TEST_CASE("threshold zero agrees with the plain checks") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto f = random_automaton(seed, 1 + seed % 4, 1 + seed % 2, Rational(1, 2),
                                  seed % 2 == 0);
        for (const auto& w : oracles::all_words(f.letter_count(), 4))
            for (Mode mode : {Mode::D1, Mode::D2, Mode::D3})
                CHECK(check_word_tau(f, w, Rational(0), mode) == check_word(f, w, mode));
    }
}

TEST_CASE("letter-level cuts commute with the max-min extension") {
    // f*(a,w,b) > tau iff some chain keeps every letter above tau, so
    // checking on the cut NFA must agree with cutting the extended weights.
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto f = random_automaton(seed, 1 + seed % 4, 1 + seed % 3, Rational(1, 2),
                                  seed % 2 == 0);
        for (int eighths = 0; eighths < 8; ++eighths) {
            Rational tau(eighths, 8);
            Nfa cut = tau_cut(f, tau);
            for (const auto& w : oracles::all_words(f.letter_count(), 4)) {
                for (Mode mode : {Mode::D1, Mode::D2, Mode::D3})
                    CHECK(check_word_tau(f, w, tau, mode) == check_word_nfa(cut, w, mode));
                for (int a = 0; a < f.state_count(); ++a)
                    CHECK(tau_reachable(f, a, w, tau) ==
                          nfa_step_set(cut, StateSet::singleton(f.state_count(), a), w));
            }
        }
    }
}

TEST_CASE("raising the threshold shrinks every reach set") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto f = random_automaton(seed, 1 + seed % 4, 1 + seed % 2, Rational(2, 5),
                                  seed % 3 == 0);
        for (const auto& w : oracles::all_words(f.letter_count(), 3))
            for (int a = 0; a < f.state_count(); ++a)
                for (int lo = 0; lo < 8; ++lo)
                    for (int hi = lo; hi < 8; ++hi)
                        CHECK(tau_reachable(f, a, w, Rational(hi, 8))
                                  .is_subset_of(tau_reachable(f, a, w, Rational(lo, 8))));
    }
}
