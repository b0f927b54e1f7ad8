#include "loci/cotra.hpp"

#include <algorithm>
#include <stdexcept>

#include "loci/topology.hpp"

namespace loci {

bool LegoCurve::contains_point(Coord p) const {
    return std::find(points.begin(), points.end(), p) != points.end();
}

namespace {

// The walk travels directed crack edges between cells, picture on the left,
// open side on the right. A corner (cy,cx) is the lattice point at the
// top-left of cell (cy,cx). Directions: 0=E, 1=S, 2=W, 3=N.
constexpr int kCornerDY[4] = {0, 1, 0, -1};
constexpr int kCornerDX[4] = {1, 0, -1, 0};

struct Edge {
    int cy = 0, cx = 0, dir = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

Coord left_cell(const Edge& e) {
    switch (e.dir) {
    case 0: return {e.cy - 1, e.cx};
    case 1: return {e.cy, e.cx};
    case 2: return {e.cy, e.cx - 1};
    default: return {e.cy - 1, e.cx - 1};
    }
}

Coord right_cell(const Edge& e) {
    switch (e.dir) {
    case 0: return {e.cy, e.cx};
    case 1: return {e.cy, e.cx - 1};
    case 2: return {e.cy - 1, e.cx - 1};
    default: return {e.cy - 1, e.cx};
    }
}

// White cell with two black 4-neighbours in perpendicular directions: the
// pinched side of a diagonal contact of the picture.
bool plugs_diagonal_gap(const BinaryImage& img, Coord p) {
    if (img.black_at(p)) return false;
    bool n = img.black_at(p.y - 1, p.x);
    bool e = img.black_at(p.y, p.x + 1);
    bool s = img.black_at(p.y + 1, p.x);
    bool w = img.black_at(p.y, p.x - 1);
    return (n && e) || (e && s) || (s && w) || (w && n);
}

} // namespace

LegoCurve trace_lego_curve(const BinaryImage& img, FillStats* stats) {
    if (!img.framed() && !img.border_all_white())
        throw std::invalid_argument("trace_lego_curve: image is not framed");
    long long blacks = img.black_count();
    if (blacks == 0) throw std::invalid_argument("trace_lego_curve: empty picture");
    if (blacks == 1) throw DegenerateInputError("trace_lego_curve: single-pixel picture");
    if (!is_connected_picture(img))
        throw std::invalid_argument("trace_lego_curve: picture is not connected");

    // Topmost, then leftmost black pixel; its top crack faces the frame.
    Coord start{0, 0};
    for (int y = 1; y <= img.rows() && start.y == 0; ++y)
        for (int x = 1; x <= img.cols(); ++x)
            if (img.black(y, x)) {
                start = {y, x};
                break;
            }

    auto successor = [&](const Edge& e) {
        int hy = e.cy + kCornerDY[e.dir];
        int hx = e.cx + kCornerDX[e.dir];
        for (int turn : {1, 0, 3}) { // right, straight, left
            Edge n{hy, hx, (e.dir + turn) & 3};
            Coord lc = left_cell(n);
            if (img.black_at(lc)) return n;
        }
        throw std::logic_error("trace_lego_curve: walk has no continuation");
    };

    LegoCurve curve;
    curve.source = img;
    Edge first{start.y, start.x + 1, 2}; // westbound along the start pixel's top crack
    curve.points.push_back(start);
    curve.frontier.insert(right_cell(first));

    std::uint64_t steps = 0;
    Edge e = first;
    while (true) {
        Edge n = successor(e);
        ++steps;
        curve.frontier.insert(right_cell(n));
        if (n == first) {
            Coord back = curve.points.back();
            Coord front = curve.points.front();
            if (back == front) {
                curve.points.pop_back();
            } else if (!four_adjacent(back, front)) {
                Coord piv = right_cell(e); // shared open-side cell of the turn
                curve.points.push_back(piv);
                curve.lpixels.insert(piv);
            }
            break;
        }
        Coord c = left_cell(n);
        Coord prev = curve.points.back();
        if (c != prev) {
            if (four_adjacent(prev, c)) {
                curve.points.push_back(c);
            } else {
                Coord piv = right_cell(e);
                curve.points.push_back(piv);
                curve.lpixels.insert(piv);
                curve.points.push_back(c);
            }
        }
        e = n;
    }
    if (stats) stats->steps += steps;
    return curve;
}

LegoCurve repair_trapped_lpixels(const LegoCurve& curve, const BinaryImage& img) {
    LegoCurve out = curve;
    std::set<Coord> on_curve(out.points.begin(), out.points.end());

    for (int y = 2; y <= img.rows() - 1; ++y) {
        for (int x = 2; x <= img.cols() - 1; ++x) {
            Coord l{y, x};
            if (!plugs_diagonal_gap(img, l)) continue;
            if (!out.frontier.count(l) || on_curve.count(l)) continue;
            // Unreached gap pixel: stitch it in as a one-deep detour from an
            // adjacent pixel that is already on the curve.
            for (std::size_t i = 0; i < out.points.size(); ++i) {
                if (four_adjacent(out.points[i], l)) {
                    Coord base = out.points[i];
                    out.points.insert(out.points.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                      {l, base});
                    out.lpixels.insert(l);
                    on_curve.insert(l);
                    break;
                }
            }
        }
    }
    return out;
}

LegoCurve prune_spikes(const LegoCurve& curve) {
    LegoCurve out = curve;
    auto& pts = out.points;

    while (pts.size() >= 5) {
        auto spikes = detect_spikes(DiscreteCurve{pts, true});
        if (spikes.empty()) break;

        int n = static_cast<int>(pts.size());
        int i = spikes.front();
        auto at = [&](int k) {
            k %= n;
            if (k < 0) k += n;
            return pts[static_cast<std::size_t>(k)];
        };
        // The flagged window is a straight out-and-back; collapse the
        // palindrome around the apex down to its base.
        int j = 1;
        while (2 * (j + 1) < n && at(i - (j + 1)) == at(i + (j + 1))) ++j;
        std::vector<char> remove(static_cast<std::size_t>(n), 0);
        for (int t = i - j + 1; t <= i + j; ++t) {
            int k = t % n;
            if (k < 0) k += n;
            remove[static_cast<std::size_t>(k)] = 1;
        }
        std::vector<Coord> next;
        for (int k = 0; k < n; ++k)
            if (!remove[static_cast<std::size_t>(k)]) next.push_back(pts[static_cast<std::size_t>(k)]);
        pts = std::move(next);
    }

    if (pts.size() < 4)
        throw DegenerateInputError("prune_spikes: curve collapsed, picture has no area");
    bool same_row = true, same_col = true;
    for (const Coord& p : pts) {
        if (p.y != pts.front().y) same_row = false;
        if (p.x != pts.front().x) same_col = false;
    }
    if (same_row || same_col)
        throw DegenerateInputError("prune_spikes: picture is a bare one-wide segment");

    std::set<Coord> on_curve(pts.begin(), pts.end());
    std::set<Coord> kept;
    for (const Coord& l : out.lpixels)
        if (on_curve.count(l)) kept.insert(l);
    out.lpixels = std::move(kept);
    return out;
}

CotraResult cotra_fill(const BinaryImage& img, FillStats* stats) {
    LegoCurve curve;
    try {
        curve = trace_lego_curve(img, stats);
        curve = repair_trapped_lpixels(curve, img);
        curve = prune_spikes(curve);
    } catch (const DegenerateInputError& e) {
        LocatingMatrix m(img.canvas(), CellClass::Exterior);
        for (Coord p : img.black_pixels()) m.set(p, CellClass::Picture);
        return {std::move(m), {e.what()}};
    }

    BinaryImage scratch(img.canvas(), true);
    for (const Coord& p : curve.points) scratch.set_black(p);

    // Parity comes from the curve itself: the number of vertical steps
    // crossing each row boundary, per column. Doubled-back stretches cross
    // twice and correctly cancel, which the raster alone cannot reveal.
    const int rows = img.rows(), cols = img.cols();
    std::vector<std::vector<int>> prefix(static_cast<std::size_t>(rows + 1),
                                         std::vector<int>(static_cast<std::size_t>(cols + 1), 0));
    const int n = static_cast<int>(curve.points.size());
    for (int i = 0; i < n; ++i) {
        Coord p = curve.points[static_cast<std::size_t>(i)];
        Coord q = curve.points[static_cast<std::size_t>((i + 1) % n)];
        if (q.y == p.y + 1)
            ++prefix[static_cast<std::size_t>(q.y)][static_cast<std::size_t>(q.x)];
        else if (q.y == p.y - 1)
            ++prefix[static_cast<std::size_t>(p.y)][static_cast<std::size_t>(p.x)];
    }
    for (int b = 1; b <= rows; ++b)
        for (int c = 1; c <= cols; ++c)
            prefix[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] +=
                prefix[static_cast<std::size_t>(b)][static_cast<std::size_t>(c - 1)];

    auto toggle = [&](const Run& r) {
        int sum = prefix[static_cast<std::size_t>(r.row)][static_cast<std::size_t>(r.col_end)] -
                  prefix[static_cast<std::size_t>(r.row)][static_cast<std::size_t>(r.col_start - 1)];
        return (sum & 1) != 0;
    };
    LocatingMatrix filled = parity_fill(scratch, toggle, stats);

    LocatingMatrix m(img.canvas(), CellClass::Exterior);
    for (int y = 1; y <= rows; ++y)
        for (int x = 1; x <= cols; ++x) {
            Coord p{y, x};
            if (img.black(p))
                m.set(p, CellClass::Picture);
            else if (curve.lpixels.count(p))
                m.set(p, CellClass::LPixel);
            else if (filled.at(p) == CellClass::Interior)
                m.set(p, CellClass::Interior);
        }
    return {std::move(m), {}};
}

} // namespace loci
