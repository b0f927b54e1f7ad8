#include "loci/scanfill.hpp"

#include <stdexcept>

namespace loci {

RowMarks find_io_pixels(const BinaryImage& img, int row) {
    if (row < 1 || row > img.rows())
        throw std::invalid_argument("find_io_pixels: row out of range");
    RowMarks out;
    out.row = row;
    for (int x = 1; x <= img.cols(); ++x) {
        if (img.black(row, x)) continue;
        bool entry = img.black_at(row, x + 1);
        bool exit = img.black_at(row, x - 1);
        if (entry && exit)
            out.marks.push_back({x, MarkKind::Both});
        else if (entry)
            out.marks.push_back({x, MarkKind::Entry});
        else if (exit)
            out.marks.push_back({x, MarkKind::Exit});
    }
    return out;
}

std::vector<Run> black_runs(const BinaryImage& img, int row) {
    std::vector<Run> out;
    int x = 1;
    while (x <= img.cols()) {
        if (img.black(row, x)) {
            int start = x;
            while (x + 1 <= img.cols() && img.black(row, x + 1)) ++x;
            out.push_back({row, start, x});
        }
        ++x;
    }
    return out;
}

namespace {

// Number of maximal black runs of `row` that share a column with [c1..c2].
int attachments_in_row(const BinaryImage& img, int row, int c1, int c2) {
    if (row < 1 || row > img.rows()) return 0;
    int count = 0;
    for (int c = c1; c <= c2; ++c)
        if (img.black(row, c) && (c == c1 || !img.black(row, c - 1))) ++count;
    return count;
}

} // namespace

RunClass classify_run(const BinaryImage& img, const Run& run) {
    int above = attachments_in_row(img, run.row - 1, run.col_start, run.col_end);
    int below = attachments_in_row(img, run.row + 1, run.col_start, run.col_end);
    // A thin spike-free closed boundary attaches exactly twice. Isolated
    // stretches and single-sided folds change nothing and pass as extrema;
    // anything with more attachments is not fillable from the image alone.
    if (above + below > 2)
        throw MalformedCurveError("run with " + std::to_string(above + below) +
                                      " vertical attachments in row " + std::to_string(run.row) +
                                      ", cols " + std::to_string(run.col_start) + ".." +
                                      std::to_string(run.col_end) +
                                      ": picture is not a thin spike-free curve",
                                  run.row);
    if (above == 1 && below == 1) return RunClass::Crossing;
    return RunClass::Extremum;
}

LocatingMatrix parity_fill(const BinaryImage& img,
                           const std::function<bool(const Run&)>& toggle,
                           FillStats* stats) {
    if (!img.framed() && !img.border_all_white())
        throw std::invalid_argument("parity_fill: image is not framed");

    LocatingMatrix m(img.canvas(), CellClass::Exterior);
    std::uint64_t steps = 0;
    for (int y = 2; y <= img.rows() - 1; ++y) {
        steps += static_cast<std::uint64_t>(img.cols());
        auto runs = black_runs(img, y);
        bool inside = false;
        int prev_end = 0;
        bool first = true;
        for (const Run& r : runs) {
            for (int x = r.col_start; x <= r.col_end; ++x) m.set(y, x, CellClass::Picture);
            if (!first && inside)
                for (int x = prev_end + 1; x < r.col_start; ++x) m.set(y, x, CellClass::Interior);
            if (toggle(r)) inside = !inside;
            steps += static_cast<std::uint64_t>(r.col_end - r.col_start + 3);
            prev_end = r.col_end;
            first = false;
        }
    }
    if (stats) stats->steps += steps;
    return m;
}

LocatingMatrix fua_fill(const BinaryImage& img, FillStats* stats) {
    if (img.black_count() == 0)
        throw std::invalid_argument("fua_fill: empty picture");
    return parity_fill(
        img, [&](const Run& r) { return classify_run(img, r) == RunClass::Crossing; }, stats);
}

} // namespace loci
