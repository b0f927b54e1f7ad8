#pragma once

#include <vector>

#include "loci/geometry.hpp"
#include "loci/raster.hpp"

namespace loci {

/// Ordered pixel list with 8-connected consecutive entries. A closed curve
/// stores each pixel of the cycle once; indices wrap modulo size().
struct DiscreteCurve {
    std::vector<Coord> points;
    bool closed = false;

    int size() const { return static_cast<int>(points.size()); }
    Coord at(int i) const {
        int n = size();
        if (closed) {
            i %= n;
            if (i < 0) i += n;
        }
        return points[static_cast<std::size_t>(i)];
    }
};

enum class Adjacency { Four, Diagonal, None };

enum class SelfIntersection { Simple, SelfCrossing, Overlapping };

/// Four if the coordinates differ by one along exactly one axis, Diagonal if
/// both axes differ by exactly one. Throws std::invalid_argument on p == q.
Adjacency adjacency_kind(Coord p, Coord q);

/// True iff every pair of black pixels is joined by an 8-connected all-black
/// path. Iterative worklist sweep. Throws on an empty black set.
bool is_connected_picture(const BinaryImage& img);

/// Side length of the largest all-black square containing p.
/// Throws std::invalid_argument when p is white.
int thickness_at(const BinaryImage& img, Coord p);

/// True iff the index range can be covered by intervals of at least four
/// indices whose pixel sets contain no full 2x2 square. The curve must be
/// injective.
bool is_locally_thin(const DiscreteCurve& curve, const BinaryImage& img);

/// SelfCrossing: two disjoint two-index segments whose pixels differ as sets
/// yet are mutually 8-connected. Overlapping: some pixel is revisited at a
/// non-consecutive index (a retraced stretch). SelfCrossing wins when both
/// patterns are present.
SelfIntersection classify_self_intersection(const DiscreteCurve& curve);

/// Indices whose two-step window keeps one coordinate constant while the
/// other is a one-sided extremum: the apex of a straight out-and-back
/// protrusion. Closed curves wrap; open curves need the full window in
/// range. Curves shorter than five points have no spikes.
std::vector<int> detect_spikes(const DiscreteCurve& curve);

} // namespace loci
