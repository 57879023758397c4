#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace partize {

// Dense bitset over the vertex indices [0, universe) of some host graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    static VertexSet full(int universe);
    static VertexSet of(int universe, std::initializer_list<int> members);
    static VertexSet of(int universe, std::span<const int> members);
    static VertexSet range(int universe, int begin, int end);

    int universe() const noexcept { return universe_; }

    bool test(int v) const;
    bool contains(int v) const { return test(v); }
    void set(int v);
    void reset(int v);
    VertexSet with(int v) const;
    VertexSet without(int v) const;

    int count() const noexcept;
    bool empty() const noexcept;
    bool any() const noexcept { return !empty(); }

    // Lowest member, or -1.
    int first() const noexcept;
    // Lowest member strictly greater than v, or -1.
    int next(int v) const noexcept;

    std::vector<int> members() const;

    template <class F> void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                f(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    // Same bits over a different universe; bits at or beyond the new universe must be clear.
    VertexSet resized(int universe) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    // Complement within the universe.
    VertexSet operator~() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    // Orders by universe, then by member list lexicographically.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

    std::size_t hash() const noexcept;
    std::string to_string() const;

private:
    void check_same_universe(const VertexSet& other) const;
    void check_index(int v) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace partize

template <> struct std::hash<partize::VertexSet> {
    std::size_t operator()(const partize::VertexSet& s) const noexcept { return s.hash(); }
};
