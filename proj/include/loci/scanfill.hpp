#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "loci/raster.hpp"

namespace loci {

enum class MarkKind { Entry, Exit, Both };

struct Mark {
    int col = 0;
    MarkKind kind = MarkKind::Entry;
    friend bool operator==(const Mark&, const Mark&) = default;
};

/// Entry/exit marks of one row, columns strictly increasing.
struct RowMarks {
    int row = 0;
    std::vector<Mark> marks;
};

/// Maximal run of consecutive black pixels within one row.
struct Run {
    int row = 0;
    int col_start = 0;
    int col_end = 0;
    friend bool operator==(const Run&, const Run&) = default;
};

enum class RunClass { Crossing, Extremum };

struct FillStats {
    std::uint64_t steps = 0;
};

/// Mark every white pixel with a black right neighbour as an entry, every
/// white pixel with a black left neighbour as an exit, and both as Both.
RowMarks find_io_pixels(const BinaryImage& img, int row);

std::vector<Run> black_runs(const BinaryImage& img, int row);

/// Classify a maximal run by its vertical attachments (maximal black runs in
/// the adjacent rows sharing a column with it). One attachment above and one
/// below means the boundary passes through the row; attachments on a single
/// side mean a local extremum. More than two attachments cannot come from a
/// thin spike-free closed curve and raise MalformedCurveError.
RunClass classify_run(const BinaryImage& img, const Run& run);

/// Shared scanline core: walk each row left to right, toggling a parity bit
/// after each run for which `toggle` returns true; white gaps between runs
/// with odd parity become Interior, black pixels Picture, the rest Exterior.
LocatingMatrix parity_fill(const BinaryImage& img,
                           const std::function<bool(const Run&)>& toggle,
                           FillStats* stats = nullptr);

/// The scanline filling pass over a framed image: runs classified from the
/// image alone, Crossing runs toggle parity. Correct for thin spike-free
/// 4-connected boundaries; other inputs may raise MalformedCurveError.
LocatingMatrix fua_fill(const BinaryImage& img, FillStats* stats = nullptr);

} // namespace loci
