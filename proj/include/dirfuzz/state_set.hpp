#ifndef DIRFUZZ_STATE_SET_HPP
#define DIRFUZZ_STATE_SET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace dirfuzz {

// Subset of the states 0..universe-1 of one automaton, as a bit set.
// Iteration is always in ascending index order, so every computation
// built on top of it is deterministic.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(int universe)
        : universe_(universe), bits_((universe + 63) / 64, 0) {}

    static StateSet singleton(int universe, int s) {
        StateSet r(universe);
        r.set(s);
        return r;
    }

    static StateSet full(int universe) {
        StateSet r(universe);
        for (int s = 0; s < universe; ++s) r.set(s);
        return r;
    }

    int universe() const { return universe_; }

    bool test(int s) const { return (bits_[s >> 6] >> (s & 63)) & 1; }
    void set(int s) { bits_[s >> 6] |= std::uint64_t{1} << (s & 63); }
    void reset(int s) { bits_[s >> 6] &= ~(std::uint64_t{1} << (s & 63)); }

    bool empty() const {
        for (auto b : bits_)
            if (b) return false;
        return true;
    }
    bool any() const { return !empty(); }

    int count() const {
        int c = 0;
        for (auto b : bits_) c += __builtin_popcountll(b);
        return c;
    }
    bool is_singleton() const { return count() == 1; }

    // Smallest member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(bits_[i]));
        return -1;
    }

    StateSet& operator|=(const StateSet& o) {
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    StateSet& operator&=(const StateSet& o) {
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }

    bool intersects(const StateSet& o) const {
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    bool is_subset_of(const StateSet& o) const {
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    friend bool operator==(const StateSet& a, const StateSet& b) {
        return a.universe_ == b.universe_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const StateSet& a, const StateSet& b) { return !(a == b); }
    friend bool operator<(const StateSet& a, const StateSet& b) {
        return a.bits_ < b.bits_;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(universe_);
        for (auto b : bits_) {
            h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h);
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t b = bits_[i];
            while (b) {
                int s = static_cast<int>(i * 64 + __builtin_ctzll(b));
                fn(s);
                b &= b - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int s) { v.push_back(s); });
        return v;
    }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

}  // namespace dirfuzz

#endif
