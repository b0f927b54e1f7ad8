#pragma once

#include <set>

#include "loci/raster.hpp"

namespace loci {

/// Ground-truth partition of a canvas: exterior / picture / interior.
struct RegionPartition {
    std::set<Coord> exterior;
    std::set<Coord> interior;
    std::set<Coord> picture;
};

enum class PictureKind { RectilinearSimple, RandomConnected, Degenerate };

/// White pixels 4-connected to the frame through white pixels only,
/// computed by an iterative worklist sweep seeded with every frame cell.
std::set<Coord> flood_exterior(const BinaryImage& img);

/// Canvas minus black set minus flood exterior.
std::set<Coord> oracle_interior(const BinaryImage& img);

RegionPartition region_partition(const BinaryImage& img);

/// Discrete Jordan check for pictures whose every black pixel has exactly
/// two black 4-neighbours (precondition; violations raise
/// std::invalid_argument naming offenders). True iff the white cells split
/// into exactly two 4-connected components, the frame's and one more.
bool jordan_check(const BinaryImage& img);

/// Deterministic test pictures, all framed with at least a one-pixel margin.
///   RectilinearSimple: outline of a simple rectilinear polygon, every black
///                      pixel with exactly two black 4-neighbours
///   RandomConnected:   8-connected blob grown from a seed pixel
///   Degenerate:        cycles through single pixels, bare segments and
///                      diagonal chains
/// Throws std::invalid_argument when rows or cols is below 8.
BinaryImage gen_test_picture(unsigned seed, int rows, int cols, PictureKind kind);

} // namespace loci
