#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace cfc {

using Vertex = std::int64_t;

/// Closed discrete interval [low, high] over 1-based vertex indices.
struct Interval {
    Vertex low = 0;
    Vertex high = 0;

    friend auto operator<=>(const Interval&, const Interval&) = default;

    bool contains(Vertex v) const { return low <= v && v <= high; }
    bool contains(const Interval& o) const { return low <= o.low && o.high <= high; }
    bool overlaps(const Interval& o) const { return low <= o.high && o.low <= high; }
};

std::ostream& operator<<(std::ostream& out, const Interval& e);

/// Total coloring: entry v-1 holds the color of vertex v. Color 0 marks a
/// vertex that is not activated and can never be the unique color of an edge.
using Coloring = std::vector<int>;

/// A subhypergraph of the discrete interval hypergraph on vertices {1..n}.
/// Interval storage has set semantics: sorted by (low, high), no duplicates.
/// n may exceed the span of the intervals (isolated vertices are allowed).
class Instance {
public:
    Instance() = default;
    Instance(Vertex n, std::vector<Interval> intervals);

    Vertex n() const { return n_; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    bool contains(const Interval& e) const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    Vertex n_ = 1;
    std::vector<Interval> intervals_;
};

/// All intervals shifted d to the right, on a ground set enlarged by d.
Instance shift_instance(const Instance& in, Vertex d);

/// Rightmost point occurring in the set minus the leftmost, plus one.
/// Throws std::invalid_argument on an empty set.
Vertex instance_length(const std::vector<Interval>& intervals);

/// floor(log2(n)) for n >= 1.
int floor_log2(Vertex n);

} // namespace cfc
