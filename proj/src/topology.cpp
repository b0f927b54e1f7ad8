#include "loci/topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace loci {

Adjacency adjacency_kind(Coord p, Coord q) {
    if (p == q) throw std::invalid_argument("adjacency_kind: identical coordinates");
    int dy = std::abs(p.y - q.y), dx = std::abs(p.x - q.x);
    if (dy + dx == 1) return Adjacency::Four;
    if (dy == 1 && dx == 1) return Adjacency::Diagonal;
    return Adjacency::None;
}

bool is_connected_picture(const BinaryImage& img) {
    std::vector<Coord> blacks = img.black_pixels();
    if (blacks.empty()) throw std::invalid_argument("is_connected_picture: empty picture");

    std::vector<std::uint8_t> seen(static_cast<std::size_t>(img.canvas().cells()), 0);
    auto idx = [&](Coord p) {
        return static_cast<std::size_t>(p.y - 1) * img.cols() + (p.x - 1);
    };
    std::vector<Coord> work{blacks.front()};
    seen[idx(blacks.front())] = 1;
    long long reached = 0;
    while (!work.empty()) {
        Coord p = work.back();
        work.pop_back();
        ++reached;
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                if (dy == 0 && dx == 0) continue;
                Coord q{p.y + dy, p.x + dx};
                if (img.black_at(q) && !seen[idx(q)]) {
                    seen[idx(q)] = 1;
                    work.push_back(q);
                }
            }
    }
    return reached == static_cast<long long>(blacks.size());
}

int thickness_at(const BinaryImage& img, Coord p) {
    if (!img.canvas().contains(p) || img.white(p))
        throw std::invalid_argument("thickness_at: pixel is not part of the picture");

    auto square_all_black = [&](int y0, int x0, int k) {
        for (int y = y0; y < y0 + k; ++y)
            for (int x = x0; x < x0 + k; ++x)
                if (!img.black_at(y, x)) return false;
        return true;
    };

    int best = 1;
    int limit = std::min(img.rows(), img.cols());
    for (int k = 2; k <= limit; ++k) {
        bool found = false;
        for (int y0 = p.y - k + 1; y0 <= p.y && !found; ++y0)
            for (int x0 = p.x - k + 1; x0 <= p.x && !found; ++x0)
                if (square_all_black(y0, x0, k)) found = true;
        if (!found) break;
        best = k;
    }
    return best;
}

namespace {

// Sliding-window thinness: a pixel set is thin iff it contains no full 2x2
// square. Tracks the number of complete 2x2 blocks as points enter and leave.
class ThinWindow {
public:
    void add(Coord p) {
        cells_.insert(p);
        blocks_ += delta(p);
    }
    void remove(Coord p) {
        blocks_ -= delta(p);
        cells_.erase(p);
    }
    bool thin() const { return blocks_ == 0; }

private:
    // Number of complete 2x2 blocks among the four containing p, counting p.
    int delta(Coord p) const {
        int n = 0;
        for (int oy = -1; oy <= 0; ++oy)
            for (int ox = -1; ox <= 0; ++ox) {
                bool full = true;
                for (int y = 0; y < 2 && full; ++y)
                    for (int x = 0; x < 2 && full; ++x)
                        if (!cells_.count({p.y + oy + y, p.x + ox + x})) full = false;
                if (full) ++n;
            }
        return n;
    }

    std::multiset<Coord> cells_;
    int blocks_ = 0;
};

} // namespace

bool is_locally_thin(const DiscreteCurve& curve, const BinaryImage& img) {
    const auto& pts = curve.points;
    int n = static_cast<int>(pts.size());
    {
        std::set<Coord> uniq(pts.begin(), pts.end());
        if (static_cast<int>(uniq.size()) != n)
            throw std::invalid_argument("is_locally_thin: curve is not injective");
    }
    for (Coord p : pts)
        if (!img.canvas().contains(p))
            throw std::invalid_argument("is_locally_thin: point outside the canvas");
    if (n < 4) return false;

    // reach[a] = largest b such that pixels at indices a..b form a thin set.
    std::vector<int> reach(static_cast<std::size_t>(n));
    ThinWindow win;
    int b = -1;
    for (int a = 0; a < n; ++a) {
        if (b < a - 1) b = a - 1;
        while (b + 1 < n) {
            win.add(pts[static_cast<std::size_t>(b + 1)]);
            if (!win.thin()) {
                win.remove(pts[static_cast<std::size_t>(b + 1)]);
                break;
            }
            ++b;
        }
        reach[static_cast<std::size_t>(a)] = b;
        if (b >= a) win.remove(pts[static_cast<std::size_t>(a)]);
    }

    // Greedy cover with intervals of at least 4 indices.
    int covered = -1;
    while (covered < n - 1) {
        int c = covered + 1;
        int best = -1;
        for (int a = 0; a <= c; ++a) {
            int r = reach[static_cast<std::size_t>(a)];
            if (r >= c && r - a + 1 >= 4) best = std::max(best, r);
        }
        if (best < c) return false;
        covered = best;
    }
    return true;
}

namespace {

struct Segment {
    int a, b; // indices into the unique point storage
};

std::vector<Segment> curve_segments(const DiscreteCurve& c) {
    std::vector<Segment> segs;
    int n = c.size();
    if (n < 2) return segs;
    int last = c.closed ? n : n - 1;
    for (int i = 0; i < last; ++i) segs.push_back({i, (i + 1) % n});
    return segs;
}

bool segments_index_disjoint(const Segment& s, const Segment& t) {
    return s.a != t.a && s.a != t.b && s.b != t.a && s.b != t.b;
}

} // namespace

SelfIntersection classify_self_intersection(const DiscreteCurve& curve) {
    const auto& pts = curve.points;
    int n = curve.size();

    bool crossing = false;
    auto segs = curve_segments(curve);
    for (std::size_t i = 0; i < segs.size() && !crossing; ++i) {
        for (std::size_t j = i + 1; j < segs.size() && !crossing; ++j) {
            if (!segments_index_disjoint(segs[i], segs[j])) continue;
            std::set<Coord> si{pts[static_cast<std::size_t>(segs[i].a)],
                               pts[static_cast<std::size_t>(segs[i].b)]};
            std::set<Coord> sj{pts[static_cast<std::size_t>(segs[j].a)],
                               pts[static_cast<std::size_t>(segs[j].b)]};
            if (si == sj) continue;
            std::set<Coord> all = si;
            all.insert(sj.begin(), sj.end());
            bool mutual = true;
            for (auto p = all.begin(); p != all.end() && mutual; ++p)
                for (auto q = std::next(p); q != all.end() && mutual; ++q)
                    if (!eight_adjacent(*p, *q)) mutual = false;
            if (mutual) crossing = true;
        }
    }
    if (crossing) return SelfIntersection::SelfCrossing;

    // A retraced stretch pivots on some index, so it always shows up as a
    // pixel revisited at a non-consecutive position.
    std::set<Coord> seen;
    for (int i = 0; i < n; ++i) {
        Coord p = pts[static_cast<std::size_t>(i)];
        if (seen.count(p)) {
            if (curve.closed) return SelfIntersection::Overlapping;
            // open curves: consecutive duplicates cannot occur in an
            // 8-connected list, so any repeat is at distance >= 2
            return SelfIntersection::Overlapping;
        }
        seen.insert(p);
    }
    return SelfIntersection::Simple;
}

std::vector<int> detect_spikes(const DiscreteCurve& curve) {
    std::vector<int> out;
    int n = curve.size();
    if (n < 5) return out;

    int lo = curve.closed ? 0 : 2;
    int hi = curve.closed ? n - 1 : n - 3;
    for (int i = lo; i <= hi; ++i) {
        Coord c = curve.at(i);
        Coord w[4] = {curve.at(i - 2), curve.at(i - 1), curve.at(i + 1), curve.at(i + 2)};

        bool x_const = true, y_low = true, y_high = true;
        bool y_const = true, x_low = true, x_high = true;
        for (Coord q : w) {
            if (q.x != c.x) x_const = false;
            if (q.y < c.y) y_low = false;
            if (q.y > c.y) y_high = false;
            if (q.y != c.y) y_const = false;
            if (q.x < c.x) x_low = false;
            if (q.x > c.x) x_high = false;
        }
        bool vertical = x_const && (y_low || y_high);
        bool horizontal = y_const && (x_low || x_high);
        if (vertical || horizontal) out.push_back(i);
    }
    return out;
}

} // namespace loci
