#include "dirfuzz/mergetest.hpp"

#include <deque>
#include <utility>

#include "dirfuzz/errors.hpp"

namespace dirfuzz {

InvertedTable inverted_table(const FuzzyAutomaton& f) {
    const int n = f.state_count();
    const int m = f.letter_count();
    InvertedTable inv;
    inv.state_count = n;
    inv.letter_count = m;
    inv.table.assign(static_cast<size_t>(n) * m, StateSet(n));
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < m; ++x)
            f.support(i, x).for_each([&](int a) { inv.table[a * m + x].set(i); });
    return inv;
}

bool d3_merges(const FuzzyAutomaton& f, const Word& w, int a, int b) {
    const int n = f.state_count();
    StateSet from_a = step_set(f, StateSet::singleton(n, a), w);
    StateSet from_b = step_set(f, StateSet::singleton(n, b), w);
    return from_a.intersects(from_b);
}

bool MuRelation::is_full() const {
    const int n = static_cast<int>(rows.size());
    for (const auto& row : rows)
        if (row.count() != n) return false;
    return true;
}

namespace {

MuRelation mu_zero(int n) {
    MuRelation r;
    r.k = 0;
    r.rows.reserve(n);
    for (int a = 0; a < n; ++a) r.rows.push_back(StateSet::singleton(n, a));
    return r;
}

MuRelation mu_step(const FuzzyAutomaton& f, const MuRelation& prev) {
    const int n = f.state_count();
    const int m = f.letter_count();
    MuRelation next = prev;
    next.k = prev.k + 1;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (prev.related(a, b)) continue;
            bool joins = false;
            for (int x = 0; x < m && !joins; ++x) {
                f.support(a, x).for_each([&](int c) {
                    if (!joins && f.support(b, x).intersects(prev.rows[c])) joins = true;
                });
            }
            if (joins) {
                next.rows[a].set(b);
                next.rows[b].set(a);
            }
        }
    }
    return next;
}

}  // namespace

MuRelation mu(const FuzzyAutomaton& f, int k) {
    MuRelation r = mu_zero(f.state_count());
    for (int i = 0; i < k; ++i) r = mu_step(f, r);
    return r;
}

MuRelation mergeability_closure(const FuzzyAutomaton& f) {
    MuRelation prev = mu_zero(f.state_count());
    for (;;) {
        MuRelation next = mu_step(f, prev);
        if (next.same_pairs(prev)) return next;  // next.k is the first stable index
        prev = std::move(next);
    }
}

bool MergeMatrix::all_set() const {
    for (auto c : cells)
        if (!c) return false;
    return true;
}

D3TestReport d3_directability_test(const FuzzyAutomaton& f) {
    if (auto witness = incompleteness_witness(f)) {
        throw IncompleteError(f.state_name(witness->first),
                              f.letter_symbol(witness->second));
    }

    const int n = f.state_count();
    const int m = f.letter_count();

    // Step 1: empty matrix, empty worklist, inverted table.
    D3TestReport report;
    report.matrix = MergeMatrix(n);
    std::deque<std::pair<int, int>> new_pairs;
    InvertedTable inv = inverted_table(f);

    auto mark = [&](int i, int j) {
        if (i == j || report.matrix.get(std::min(i, j), std::max(i, j))) return;
        report.matrix.set(std::min(i, j), std::max(i, j));
        new_pairs.emplace_back(std::min(i, j), std::max(i, j));
    };

    // Step 2: seed with pairs sharing a one-letter target.
    for (int a = 0; a < n; ++a) {
        for (int x = 0; x < m; ++x) {
            const StateSet& sources = inv.at(a, x);
            if (sources.count() <= 1) continue;
            auto members = sources.to_vector();
            for (size_t i = 0; i < members.size(); ++i)
                for (size_t j = i + 1; j < members.size(); ++j)
                    mark(members[i], members[j]);
        }
    }

    // Step 3: propagate one-letter predecessors of known-mergeable pairs.
    while (!new_pairs.empty()) {
        auto [a, b] = new_pairs.front();
        new_pairs.pop_front();
        ++report.pop_count;
        for (int x = 0; x < m; ++x) {
            inv.at(a, x).for_each([&](int i) {
                inv.at(b, x).for_each([&](int j) {
                    if (i != j) mark(i, j);
                });
            });
        }
    }

    // Step 4: directable iff every pair is marked.
    report.directable = report.matrix.all_set();
    return report;
}

}  // namespace dirfuzz
