#pragma once

#include <compare>

namespace loci {

// Canvas coordinates are 1-based (y, x), y growing downward, row-major.
struct Coord {
    int y = 0;
    int x = 0;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

struct Canvas {
    int rows = 0;
    int cols = 0;

    bool contains(Coord p) const {
        return p.y >= 1 && p.y <= rows && p.x >= 1 && p.x <= cols;
    }
    long long cells() const { return 1LL * rows * cols; }

    friend bool operator==(const Canvas&, const Canvas&) = default;
};

inline int chebyshev(Coord p, Coord q) {
    int dy = p.y > q.y ? p.y - q.y : q.y - p.y;
    int dx = p.x > q.x ? p.x - q.x : q.x - p.x;
    return dy > dx ? dy : dx;
}

inline bool four_adjacent(Coord p, Coord q) {
    int dy = p.y - q.y, dx = p.x - q.x;
    if (dy < 0) dy = -dy;
    if (dx < 0) dx = -dx;
    return dy + dx == 1;
}

inline bool eight_adjacent(Coord p, Coord q) {
    return p != q && chebyshev(p, q) <= 1;
}

} // namespace loci
