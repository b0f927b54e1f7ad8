#include "loci/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace loci {

namespace {

constexpr int kDY4[4] = {-1, 1, 0, 0};
constexpr int kDX4[4] = {0, 0, -1, 1};

std::vector<std::uint8_t> flood_mask(const BinaryImage& img) {
    const int rows = img.rows(), cols = img.cols();
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(rows) * cols, 0);
    auto idx = [&](int y, int x) { return static_cast<std::size_t>(y - 1) * cols + (x - 1); };

    std::vector<Coord> work;
    auto push = [&](int y, int x) {
        if (y < 1 || y > rows || x < 1 || x > cols) return;
        if (img.black(y, x) || mask[idx(y, x)]) return;
        mask[idx(y, x)] = 1;
        work.push_back({y, x});
    };
    for (int x = 1; x <= cols; ++x) {
        push(1, x);
        push(rows, x);
    }
    for (int y = 1; y <= rows; ++y) {
        push(y, 1);
        push(y, cols);
    }
    while (!work.empty()) {
        Coord p = work.back();
        work.pop_back();
        for (int d = 0; d < 4; ++d) push(p.y + kDY4[d], p.x + kDX4[d]);
    }
    return mask;
}

} // namespace

std::set<Coord> flood_exterior(const BinaryImage& img) {
    if (!img.framed() && !img.border_all_white())
        throw std::invalid_argument("flood_exterior: image is not framed");
    auto mask = flood_mask(img);
    std::set<Coord> out;
    for (int y = 1; y <= img.rows(); ++y)
        for (int x = 1; x <= img.cols(); ++x)
            if (mask[static_cast<std::size_t>(y - 1) * img.cols() + (x - 1)])
                out.insert({y, x});
    return out;
}

std::set<Coord> oracle_interior(const BinaryImage& img) {
    if (!img.framed() && !img.border_all_white())
        throw std::invalid_argument("oracle_interior: image is not framed");
    auto mask = flood_mask(img);
    std::set<Coord> out;
    for (int y = 1; y <= img.rows(); ++y)
        for (int x = 1; x <= img.cols(); ++x)
            if (img.white(y, x) && !mask[static_cast<std::size_t>(y - 1) * img.cols() + (x - 1)])
                out.insert({y, x});
    return out;
}

RegionPartition region_partition(const BinaryImage& img) {
    RegionPartition part;
    auto mask = flood_mask(img);
    for (int y = 1; y <= img.rows(); ++y)
        for (int x = 1; x <= img.cols(); ++x) {
            Coord p{y, x};
            if (img.black(p))
                part.picture.insert(p);
            else if (mask[static_cast<std::size_t>(y - 1) * img.cols() + (x - 1)])
                part.exterior.insert(p);
            else
                part.interior.insert(p);
        }
    return part;
}

bool jordan_check(const BinaryImage& img) {
    if (!img.framed() && !img.border_all_white())
        throw std::invalid_argument("jordan_check: image is not framed");

    // Hypothesis: every black pixel touches exactly two black pixels edgewise.
    std::string offenders;
    int offender_count = 0;
    for (int y = 1; y <= img.rows(); ++y)
        for (int x = 1; x <= img.cols(); ++x) {
            if (!img.black(y, x)) continue;
            int deg = 0;
            for (int d = 0; d < 4; ++d)
                if (img.black_at(y + kDY4[d], x + kDX4[d])) ++deg;
            if (deg != 2) {
                if (offender_count < 8)
                    offenders += " (" + std::to_string(y) + "," + std::to_string(x) + ")";
                ++offender_count;
            }
        }
    if (offender_count > 0)
        throw std::invalid_argument(
            "jordan_check: " + std::to_string(offender_count) +
            " pixel(s) without exactly two 4-neighbours:" + offenders);

    // Label white 4-components.
    const int rows = img.rows(), cols = img.cols();
    std::vector<int> label(static_cast<std::size_t>(rows) * cols, 0);
    auto idx = [&](int y, int x) { return static_cast<std::size_t>(y - 1) * cols + (x - 1); };
    int components = 0;
    for (int y = 1; y <= rows; ++y)
        for (int x = 1; x <= cols; ++x) {
            if (img.black(y, x) || label[idx(y, x)] != 0) continue;
            ++components;
            std::vector<Coord> work{{y, x}};
            label[idx(y, x)] = components;
            while (!work.empty()) {
                Coord p = work.back();
                work.pop_back();
                for (int d = 0; d < 4; ++d) {
                    int ny = p.y + kDY4[d], nx = p.x + kDX4[d];
                    if (ny < 1 || ny > rows || nx < 1 || nx > cols) continue;
                    if (img.black(ny, nx) || label[idx(ny, nx)] != 0) continue;
                    label[idx(ny, nx)] = components;
                    work.push_back({ny, nx});
                }
            }
        }
    return components == 2;
}

namespace {

// All randomness flows through the raw engine so bitmaps are identical
// across standard library implementations.
unsigned pick(std::mt19937& rng, unsigned n) { return rng() % n; }

BinaryImage gen_rectangle_outline(std::mt19937& rng, int rows, int cols) {
    int h = 4 + static_cast<int>(pick(rng, static_cast<unsigned>(rows - 6)));
    int w = 4 + static_cast<int>(pick(rng, static_cast<unsigned>(cols - 6)));
    h = std::min(h, rows - 4);
    w = std::min(w, cols - 4);
    int y0 = 3 + static_cast<int>(pick(rng, static_cast<unsigned>(rows - h - 3)));
    int x0 = 3 + static_cast<int>(pick(rng, static_cast<unsigned>(cols - w - 3)));
    BinaryImage img({rows, cols}, true);
    for (int x = x0; x < x0 + w; ++x) {
        img.set_black(y0, x);
        img.set_black(y0 + h - 1, x);
    }
    for (int y = y0; y < y0 + h; ++y) {
        img.set_black(y, x0);
        img.set_black(y, x0 + w - 1);
    }
    return img;
}

bool valid_rectilinear_outline(const BinaryImage& img) {
    long long blacks = 0;
    for (int y = 1; y <= img.rows(); ++y)
        for (int x = 1; x <= img.cols(); ++x) {
            if (!img.black(y, x)) continue;
            ++blacks;
            int deg = 0;
            for (int d = 0; d < 4; ++d)
                if (img.black_at(y + kDY4[d], x + kDX4[d])) ++deg;
            if (deg != 2) return false;
        }
    if (blacks == 0) return false;
    if (!oracle_interior(img).empty()) return true;
    return false;
}

BinaryImage gen_rectilinear_simple(std::mt19937& rng, int rows, int cols) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        // Union of a few axis-aligned solid rectangles, then its outline.
        int count = 1 + static_cast<int>(pick(rng, 3));
        std::vector<std::uint8_t> solid(static_cast<std::size_t>(rows) * cols, 0);
        auto at = [&](int y, int x) -> std::uint8_t& {
            return solid[static_cast<std::size_t>(y - 1) * cols + (x - 1)];
        };
        int prev_y0 = 0, prev_x0 = 0, prev_y1 = 0, prev_x1 = 0;
        bool ok = true;
        for (int r = 0; r < count && ok; ++r) {
            int h = 5 + static_cast<int>(pick(rng, static_cast<unsigned>(std::max(1, rows - 8))));
            int w = 5 + static_cast<int>(pick(rng, static_cast<unsigned>(std::max(1, cols - 8))));
            h = std::min(h, rows - 4);
            w = std::min(w, cols - 4);
            int y0, x0;
            if (r == 0) {
                y0 = 3 + static_cast<int>(pick(rng, static_cast<unsigned>(rows - h - 3)));
                x0 = 3 + static_cast<int>(pick(rng, static_cast<unsigned>(cols - w - 3)));
            } else {
                // Overlap the previous rectangle so the union stays connected.
                int ylo = std::max(3, prev_y0 - h + 3);
                int yhi = std::min(rows - h - 1, prev_y1 - 2);
                int xlo = std::max(3, prev_x0 - w + 3);
                int xhi = std::min(cols - w - 1, prev_x1 - 2);
                if (ylo > yhi || xlo > xhi) {
                    ok = false;
                    break;
                }
                y0 = ylo + static_cast<int>(pick(rng, static_cast<unsigned>(yhi - ylo + 1)));
                x0 = xlo + static_cast<int>(pick(rng, static_cast<unsigned>(xhi - xlo + 1)));
            }
            for (int y = y0; y < y0 + h; ++y)
                for (int x = x0; x < x0 + w; ++x) at(y, x) = 1;
            prev_y0 = y0;
            prev_x0 = x0;
            prev_y1 = y0 + h - 1;
            prev_x1 = x0 + w - 1;
        }
        if (!ok) continue;

        BinaryImage img({rows, cols}, true);
        for (int y = 2; y <= rows - 1; ++y)
            for (int x = 2; x <= cols - 1; ++x) {
                if (!at(y, x)) continue;
                bool boundary = false;
                for (int dy = -1; dy <= 1 && !boundary; ++dy)
                    for (int dx = -1; dx <= 1 && !boundary; ++dx)
                        if (!at(y + dy, x + dx)) boundary = true;
                if (boundary) img.set_black(y, x);
            }
        if (valid_rectilinear_outline(img)) return img;
    }
    return gen_rectangle_outline(rng, rows, cols);
}

BinaryImage gen_random_connected(std::mt19937& rng, int rows, int cols) {
    BinaryImage img({rows, cols}, true);
    long long usable = 1LL * (rows - 4) * (cols - 4);
    long long target =
        std::max<long long>(4, usable * (10 + static_cast<long long>(pick(rng, 26))) / 100);

    std::vector<Coord> blacks;
    Coord seed{3 + static_cast<int>(pick(rng, static_cast<unsigned>(rows - 5))),
               3 + static_cast<int>(pick(rng, static_cast<unsigned>(cols - 5)))};
    img.set_black(seed);
    blacks.push_back(seed);

    long long misses = 0;
    while (static_cast<long long>(blacks.size()) < target && misses < 16 * target) {
        Coord base = blacks[pick(rng, static_cast<unsigned>(blacks.size()))];
        int dy = static_cast<int>(pick(rng, 3)) - 1;
        int dx = static_cast<int>(pick(rng, 3)) - 1;
        Coord q{base.y + dy, base.x + dx};
        if ((dy == 0 && dx == 0) || q.y < 3 || q.y > rows - 2 || q.x < 3 || q.x > cols - 2 ||
            img.black(q)) {
            ++misses;
            continue;
        }
        img.set_black(q);
        blacks.push_back(q);
    }
    return img;
}

BinaryImage gen_degenerate(std::mt19937& rng, int rows, int cols, unsigned seed) {
    BinaryImage img({rows, cols}, true);
    int variant = static_cast<int>(seed % 3);
    int max_len = std::max(2, std::min(rows, cols) - 4);
    int len = 2 + static_cast<int>(pick(rng, static_cast<unsigned>(max_len - 1)));
    int y = 3 + static_cast<int>(pick(rng, static_cast<unsigned>(std::max(1, rows - len - 4))));
    int x = 3 + static_cast<int>(pick(rng, static_cast<unsigned>(std::max(1, cols - len - 4))));
    switch (variant) {
    case 0:
        img.set_black(y, x);
        break;
    case 1:
        if (pick(rng, 2) == 0)
            for (int i = 0; i < len; ++i) img.set_black(y + i, x);
        else
            for (int i = 0; i < len; ++i) img.set_black(y, x + i);
        break;
    default:
        for (int i = 0; i < len; ++i) img.set_black(y + i, x + i);
        break;
    }
    return img;
}

} // namespace

BinaryImage gen_test_picture(unsigned seed, int rows, int cols, PictureKind kind) {
    if (rows < 8 || cols < 8)
        throw std::invalid_argument("gen_test_picture: canvas must be at least 8x8");
    std::seed_seq seq{seed, static_cast<unsigned>(rows), static_cast<unsigned>(cols),
                      static_cast<unsigned>(kind)};
    std::mt19937 rng(seq);
    switch (kind) {
    case PictureKind::RectilinearSimple: return gen_rectilinear_simple(rng, rows, cols);
    case PictureKind::RandomConnected: return gen_random_connected(rng, rows, cols);
    default: return gen_degenerate(rng, rows, cols, seed);
    }
}

} // namespace loci
