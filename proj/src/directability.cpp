#include "dirfuzz/directability.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "dirfuzz/errors.hpp"

namespace dirfuzz {

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::D1: return "d1";
        case Mode::D2: return "d2";
        case Mode::D3: return "d3";
    }
    return "?";
}

std::optional<Mode> mode_from_string(std::string_view text) {
    if (text == "d1" || text == "D1") return Mode::D1;
    if (text == "d2" || text == "D2") return Mode::D2;
    if (text == "d3" || text == "D3") return Mode::D3;
    return std::nullopt;
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const {
    std::size_t h = 0x2545f4914f6cdd1dull;
    for (const auto& s : c) {
        h ^= s.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

Configuration initial_configuration(int state_count) {
    Configuration c;
    c.reserve(state_count);
    for (int a = 0; a < state_count; ++a)
        c.push_back(StateSet::singleton(state_count, a));
    return c;
}

namespace {

template <typename Automaton>
Configuration advance_impl(const Automaton& aut, const Configuration& c, int letter,
                           const StateSet& (Automaton::*succ)(int, int) const) {
    Configuration next;
    next.reserve(c.size());
    const int n = static_cast<int>(c.size());
    for (const auto& component : c) {
        StateSet s(n);
        component.for_each([&](int a) { s |= (aut.*succ)(a, letter); });
        next.push_back(std::move(s));
    }
    return next;
}

}  // namespace

Configuration advance_configuration(const FuzzyAutomaton& f, const Configuration& c, int letter) {
    return advance_impl(f, c, letter, &FuzzyAutomaton::support);
}

Configuration advance_configuration(const Nfa& n, const Configuration& c, int letter) {
    return advance_impl(n, c, letter, &Nfa::successors);
}

bool configuration_directs(const Configuration& c, Mode mode) {
    switch (mode) {
        case Mode::D1: {
            const StateSet& head = c.front();
            if (!head.is_singleton()) return false;
            for (const auto& s : c)
                if (s != head) return false;
            return true;
        }
        case Mode::D2: {
            const StateSet& head = c.front();
            for (const auto& s : c)
                if (s != head) return false;
            return true;
        }
        case Mode::D3: {
            StateSet common = c.front();
            for (const auto& s : c) {
                common &= s;
                if (common.empty()) return false;
            }
            return true;
        }
    }
    return false;
}

bool check_word(const FuzzyAutomaton& f, const Word& w, Mode mode) {
    Configuration c = initial_configuration(f.state_count());
    for (int x : w) c = advance_configuration(f, c, x);
    return configuration_directs(c, mode);
}

bool check_word_nfa(const Nfa& nfa, const Word& w, Mode mode) {
    Configuration c = initial_configuration(nfa.state_count());
    for (int x : w) c = advance_configuration(nfa, c, x);
    return configuration_directs(c, mode);
}

namespace {

std::uint8_t finals_of(const Configuration& c) {
    std::uint8_t mask = 0;
    if (configuration_directs(c, Mode::D1)) mask |= 1u << 0;
    if (configuration_directs(c, Mode::D2)) mask |= 1u << 1;
    if (configuration_directs(c, Mode::D3)) mask |= 1u << 2;
    return mask;
}

}  // namespace

DfaRecognizer build_recognizer(const FuzzyAutomaton& f, Mode mode, long state_cap) {
    const int m = f.letter_count();
    DfaRecognizer r;
    r.mode = mode;
    r.letter_count = m;

    std::unordered_map<Configuration, int, ConfigurationHash> index;
    auto intern = [&](Configuration&& c) -> int {
        auto it = index.find(c);
        if (it != index.end()) return it->second;
        if (static_cast<long>(r.configs.size()) >= state_cap) return -1;
        int id = static_cast<int>(r.configs.size());
        r.final_mask.push_back(finals_of(c));
        index.emplace(c, id);
        r.configs.push_back(std::move(c));
        r.next.resize(r.configs.size() * m, -2);  // -2 = not yet expanded
        return id;
    };

    intern(initial_configuration(f.state_count()));
    for (size_t cur = 0; cur < r.configs.size(); ++cur) {
        for (int x = 0; x < m; ++x) {
            int target = intern(advance_configuration(f, r.configs[cur], x));
            r.next[cur * m + x] = target;
            if (target < 0) r.truncated = true;
        }
    }
    for (auto& t : r.next)
        if (t == -2) t = -1;
    return r;
}

bool recognizer_accepts(const DfaRecognizer& r, const Word& w, Mode mode) {
    if (r.truncated)
        throw std::logic_error("recognizer_accepts requires an uncapped recognizer");
    int state = r.initial();
    for (int x : w) state = r.next[state * r.letter_count + x];
    return r.is_final(state, mode);
}

bool recognizer_accepts(const DfaRecognizer& r, const Word& w) {
    return recognizer_accepts(r, w, r.mode);
}

DirectabilityReport shortest_directing_word(const FuzzyAutomaton& f, Mode mode,
                                            long state_cap) {
    const int m = f.letter_count();
    DirectabilityReport report;
    report.mode = mode;

    std::unordered_map<Configuration, int, ConfigurationHash> index;
    std::vector<Configuration> configs;
    std::vector<std::pair<int, int>> parent;  // (parent id, letter); (-1,-1) at root

    auto reconstruct = [&](int id) {
        Word w;
        while (parent[id].first >= 0) {
            w.push_back(parent[id].second);
            id = parent[id].first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    Configuration b0 = initial_configuration(f.state_count());
    index.emplace(b0, 0);
    configs.push_back(std::move(b0));
    parent.emplace_back(-1, -1);

    // BFS discovery order enumerates configurations by their shortest
    // (length-lexicographically least) access word, so the first final
    // configuration found yields the least directing word.
    for (size_t cur = 0; cur < configs.size(); ++cur) {
        if (configuration_directs(configs[cur], mode)) {
            report.directable = true;
            report.witness = reconstruct(static_cast<int>(cur));
            report.explored = static_cast<long>(configs.size());
            return report;
        }
        for (int x = 0; x < m; ++x) {
            Configuration c = advance_configuration(f, configs[cur], x);
            if (index.count(c)) continue;
            if (static_cast<long>(configs.size()) >= state_cap) {
                report.truncated = true;
                report.explored = static_cast<long>(configs.size());
                return report;
            }
            index.emplace(c, static_cast<int>(configs.size()));
            configs.push_back(std::move(c));
            parent.emplace_back(static_cast<int>(cur), x);
        }
    }
    report.explored = static_cast<long>(configs.size());
    return report;  // space exhausted: the language is empty, exactly
}

std::vector<Word> brute_force_directing_words(const FuzzyAutomaton& f, Mode mode,
                                              int max_len, long long budget) {
    const int m = f.letter_count();
    auto over_budget = [&]() {
        return BudgetExceededError("enumerating words of length <= " +
                                   std::to_string(max_len) + " exceeds the budget of " +
                                   std::to_string(budget) + " words");
    };
    long long total = 0, layer = 1;
    for (int k = 0;; ++k) {
        total += layer;
        if (total > budget) throw over_budget();
        if (k == max_len) break;
        if (layer > budget / (m > 1 ? m : 1)) throw over_budget();
        layer *= m;
    }

    std::vector<Word> hits;
    Word w;
    for (int len = 0; len <= max_len; ++len) {
        w.assign(len, 0);
        while (true) {
            if (check_word(f, w, mode)) hits.push_back(w);
            // odometer increment in alphabet order
            int pos = len - 1;
            while (pos >= 0 && w[pos] == m - 1) {
                w[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++w[pos];
        }
        if (m == 0) break;  // only the empty word exists
    }
    return hits;
}

}  // namespace dirfuzz
