#pragma once

#include <set>
#include <string>
#include <vector>

#include "loci/raster.hpp"
#include "loci/scanfill.hpp"

namespace loci {

/// Closed 4-connected outline of a picture. Points may repeat where the
/// outline doubles back along a one-wide stretch. White pixels stitched in
/// to bridge diagonal contacts are collected in `lpixels`.
struct LegoCurve {
    std::vector<Coord> points;
    std::set<Coord> lpixels;
    std::set<Coord> frontier; // white cells seen on the open side of the walk
    BinaryImage source;

    bool contains_point(Coord p) const;
};

/// Result of the corrected fill. `warnings` is non-empty when the picture was
/// degenerate (nothing to enclose) and the matrix holds no Interior cells.
struct CotraResult {
    LocatingMatrix matrix;
    std::vector<std::string> warnings;
};

/// Trace the closed 4-connected outline separating the picture from the
/// white region around it. Diagonal contacts are bridged through the white
/// pixel they pinch, which records exactly the picture's l-pixels. The raw
/// trace may still carry spikes; prune_spikes removes them.
/// Throws DegenerateInputError on a single-pixel picture and
/// std::invalid_argument on disconnected or unframed input.
LegoCurve trace_lego_curve(const BinaryImage& img, FillStats* stats = nullptr);

/// Stitch in any bridging white pixel the trace left unvisited. The walk
/// construction visits all of them, so this normally verifies and returns
/// its input unchanged.
LegoCurve repair_trapped_lpixels(const LegoCurve& curve, const BinaryImage& img);

/// Collapse straight out-and-back protrusions flagged by detect_spikes down
/// to their base until none remain. Throws DegenerateInputError when the
/// curve collapses to a bare segment or less.
LegoCurve prune_spikes(const LegoCurve& curve);

/// Full pipeline: trace, repair, prune, rasterize the curve and run the
/// scanline fill with parity taken from the curve's own vertical steps, then
/// classify cells back onto the source picture. Degenerate pictures yield an
/// interior-free matrix plus a warning instead of failing.
CotraResult cotra_fill(const BinaryImage& img, FillStats* stats = nullptr);

} // namespace loci
