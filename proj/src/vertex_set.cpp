#include "partize/vertex_set.hpp"

#include "partize/errors.hpp"

#include <algorithm>

namespace partize {

namespace {

std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

} // namespace

VertexSet::VertexSet(int universe)
    : universe_(universe)
{
    if (universe < 0)
        throw ContractViolation("VertexSet: negative universe");
    words_.assign(word_count(universe), 0);
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    for (auto& w : s.words_)
        w = ~std::uint64_t{0};
    if (int tail = universe % 64; tail != 0)
        s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members)
{
    return of(universe, std::span<const int>(members.begin(), members.size()));
}

VertexSet VertexSet::of(int universe, std::span<const int> members)
{
    VertexSet s(universe);
    for (int v : members)
        s.set(v);
    return s;
}

VertexSet VertexSet::range(int universe, int begin, int end)
{
    VertexSet s(universe);
    for (int v = begin; v < end; ++v)
        s.set(v);
    return s;
}

void VertexSet::check_index(int v) const
{
    if (v < 0 || v >= universe_)
        throw ContractViolation("vertex " + std::to_string(v) + " outside universe of size "
                                + std::to_string(universe_));
}

void VertexSet::check_same_universe(const VertexSet& other) const
{
    if (universe_ != other.universe_)
        throw ContractViolation("VertexSet universes differ: " + std::to_string(universe_) + " vs "
                                + std::to_string(other.universe_));
}

bool VertexSet::test(int v) const
{
    check_index(v);
    return (words_[v / 64] >> (v % 64)) & 1u;
}

void VertexSet::set(int v)
{
    check_index(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::reset(int v)
{
    check_index(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

VertexSet VertexSet::with(int v) const
{
    VertexSet s = *this;
    s.set(v);
    return s;
}

VertexSet VertexSet::without(int v) const
{
    VertexSet s = *this;
    s.reset(v);
    return s;
}

int VertexSet::count() const noexcept
{
    int c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int VertexSet::first() const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

int VertexSet::next(int v) const noexcept
{
    int start = v + 1;
    if (start >= universe_)
        return -1;
    std::size_t w = static_cast<std::size_t>(start) / 64;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start % 64));
    while (true) {
        if (bits)
            return static_cast<int>(w * 64 + std::countr_zero(bits));
        if (++w == words_.size())
            return -1;
        bits = words_[w];
    }
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

VertexSet VertexSet::resized(int universe) const
{
    VertexSet s(universe);
    for_each([&](int v) {
        if (v >= universe)
            throw ContractViolation("resized: member " + std::to_string(v) + " does not fit");
        s.set(v);
    });
    return s;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::operator~() const { return full(universe_) - *this; }

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b)
{
    if (auto c = a.universe_ <=> b.universe_; c != 0)
        return c;
    int x = a.first(), y = b.first();
    while (x != -1 && y != -1) {
        if (x != y)
            return x <=> y;
        x = a.next(x);
        y = b.next(y);
    }
    if (x == y)
        return std::strong_ordering::equal;
    return x == -1 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t VertexSet::hash() const noexcept
{
    std::size_t h = std::hash<int>{}(universe_);
    for (auto w : words_)
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::string VertexSet::to_string() const
{
    std::string out = "{";
    bool first_member = true;
    for_each([&](int v) {
        if (!first_member)
            out += ",";
        out += std::to_string(v);
        first_member = false;
    });
    return out + "}";
}

} // namespace partize
