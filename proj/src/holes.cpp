#include "partize/holes.hpp"

#include <set>

namespace partize {

namespace {

// Depth-first extension of induced paths starting at `start`, all other vertices > start.
class CycleSearch {
public:
    CycleSearch(const Graph& g, int length)
        : g_(g)
        , length_(length)
    {
    }

    std::optional<std::vector<int>> run()
    {
        for (int s = 0; s + length_ <= g_.n(); ++s) {
            start_ = s;
            path_.assign(1, s);
            on_path_ = VertexSet::of(g_.n(), {s});
            if (extend(VertexSet(g_.n())))
                return path_;
        }
        return std::nullopt;
    }

private:
    // blocked = neighbors of path vertices other than the start and the last vertex.
    bool extend(const VertexSet& blocked)
    {
        int size = static_cast<int>(path_.size());
        if (size == length_)
            return true;
        int last = path_.back();
        bool closing = size + 1 == length_;
        for (int w = g_.neighbors(last).next(start_); w != -1; w = g_.neighbors(last).next(w)) {
            if (on_path_.test(w) || blocked.test(w))
                continue;
            bool touches_start = g_.adjacent(w, start_);
            if (size >= 2 && touches_start != closing)
                continue;
            if (size == 1 && closing)
                continue;
            VertexSet next_blocked = blocked;
            if (size >= 2)
                next_blocked |= g_.neighbors(last);
            path_.push_back(w);
            on_path_.set(w);
            if (extend(next_blocked))
                return true;
            path_.pop_back();
            on_path_.reset(w);
        }
        return false;
    }

    const Graph& g_;
    int length_;
    int start_ = 0;
    std::vector<int> path_;
    VertexSet on_path_;
};

bool is_induced_cycle(const Graph& h, const std::vector<int>& cycle)
{
    int len = static_cast<int>(cycle.size());
    if (len < 5 || len % 2 == 0)
        return false;
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (static_cast<int>(distinct.size()) != len)
        return false;
    for (int v : cycle)
        if (v < 0 || v >= h.n())
            return false;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if (h.adjacent(cycle[i], cycle[j]) != consecutive)
                return false;
        }
    return true;
}

} // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g)
{
    for (int len = 5; len <= g.n(); len += 2)
        if (auto cycle = CycleSearch(g, len).run())
            return cycle;
    return std::nullopt;
}

std::optional<OddHoleCertificate> find_odd_hole_or_antihole(const Graph& g)
{
    if (auto cycle = find_odd_hole(g))
        return OddHoleCertificate{std::move(*cycle), HoleKind::hole};
    if (auto cycle = find_odd_hole(complement(g)))
        return OddHoleCertificate{std::move(*cycle), HoleKind::antihole};
    return std::nullopt;
}

bool is_valid_certificate(const Graph& g, const OddHoleCertificate& cert)
{
    return cert.kind == HoleKind::hole ? is_induced_cycle(g, cert.cycle)
                                       : is_induced_cycle(complement(g), cert.cycle);
}

} // namespace partize
