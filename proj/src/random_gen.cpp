#include "dirfuzz/random_gen.hpp"

#include <random>
#include <stdexcept>

namespace dirfuzz {

FuzzyAutomaton random_automaton(std::uint64_t seed, int n, int m,
                                const Rational& density, bool complete) {
    if (n < 1 || m < 1) throw std::invalid_argument("need at least one state and one letter");
    if (density <= Rational(0) || density > Rational(1))
        throw std::invalid_argument("density must be in (0,1]");

    std::mt19937_64 rng(seed);
    auto draw_weight = [&rng] {
        return Rational(1 + static_cast<std::int64_t>(rng() % 8), 8);
    };
    auto coin = [&rng, &density] {
        return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(
                   density.denominator())) < density.numerator();
    };

    std::vector<std::string> states, letters;
    for (int a = 0; a < n; ++a) states.push_back("q" + std::to_string(a));
    for (int x = 0; x < m; ++x) letters.push_back("x" + std::to_string(x));

    std::vector<Transition> ts;
    std::vector<char> row_nonempty(static_cast<size_t>(n) * m, 0);
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < m; ++x)
            for (int b = 0; b < n; ++b)
                if (coin()) {
                    ts.push_back({a, x, b, draw_weight()});
                    row_nonempty[a * m + x] = 1;
                }

    if (complete) {
        for (int a = 0; a < n; ++a)
            for (int x = 0; x < m; ++x)
                if (!row_nonempty[a * m + x]) {
                    int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
                    ts.push_back({a, x, b, draw_weight()});
                }
    }
    return FuzzyAutomaton(std::move(states), std::move(letters), std::move(ts));
}

}  // namespace dirfuzz
