#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loci/errors.hpp"
#include "loci/geometry.hpp"

namespace loci {

/// Black/white bitmap on a canvas. Black pixels are the picture.
/// Instances are value types; operations never mutate their inputs, so
/// sharing copies across threads is safe.
class BinaryImage {
public:
    BinaryImage() = default;
    BinaryImage(Canvas canvas, bool framed = false)
        : canvas_(canvas), bits_(static_cast<std::size_t>(canvas.cells()), 0), framed_(framed) {}

    const Canvas& canvas() const { return canvas_; }
    int rows() const { return canvas_.rows; }
    int cols() const { return canvas_.cols; }
    bool framed() const { return framed_; }
    void set_framed(bool f) { framed_ = f; }

    bool black(int y, int x) const { return bits_[index(y, x)] != 0; }
    bool black(Coord p) const { return black(p.y, p.x); }
    bool white(int y, int x) const { return !black(y, x); }
    bool white(Coord p) const { return !black(p); }

    // Out-of-canvas coordinates read as white.
    bool black_at(int y, int x) const {
        return y >= 1 && y <= canvas_.rows && x >= 1 && x <= canvas_.cols && black(y, x);
    }
    bool black_at(Coord p) const { return black_at(p.y, p.x); }

    void set_black(int y, int x) { bits_[index(y, x)] = 1; }
    void set_black(Coord p) { set_black(p.y, p.x); }
    void set_white(int y, int x) { bits_[index(y, x)] = 0; }

    long long black_count() const;
    std::vector<Coord> black_pixels() const;
    bool border_all_white() const;

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    std::size_t index(int y, int x) const {
        return static_cast<std::size_t>(y - 1) * canvas_.cols + (x - 1);
    }

    Canvas canvas_;
    std::vector<std::uint8_t> bits_;
    bool framed_ = false;
};

/// Per-pixel classification answering point-location queries in O(1).
/// Cell codes are stable and leak into the pgm/csv encodings verbatim.
enum class CellClass : std::uint8_t {
    Exterior = 0,
    Picture = 1,
    Interior = 2,
    LPixel = 3,
};

class LocatingMatrix {
public:
    LocatingMatrix() = default;
    explicit LocatingMatrix(Canvas canvas, CellClass fill = CellClass::Exterior)
        : canvas_(canvas),
          cells_(static_cast<std::size_t>(canvas.cells()), static_cast<std::uint8_t>(fill)) {}

    const Canvas& canvas() const { return canvas_; }
    int rows() const { return canvas_.rows; }
    int cols() const { return canvas_.cols; }

    CellClass at(int y, int x) const { return static_cast<CellClass>(cells_[index(y, x)]); }
    CellClass at(Coord p) const { return at(p.y, p.x); }
    void set(int y, int x, CellClass c) { cells_[index(y, x)] = static_cast<std::uint8_t>(c); }
    void set(Coord p, CellClass c) { set(p.y, p.x, c); }

    long long count(CellClass c) const;
    std::vector<Coord> cells_of(CellClass c) const;

    friend bool operator==(const LocatingMatrix&, const LocatingMatrix&) = default;

private:
    std::size_t index(int y, int x) const {
        return static_cast<std::size_t>(y - 1) * canvas_.cols + (x - 1);
    }

    Canvas canvas_;
    std::vector<std::uint8_t> cells_;
};

enum class MatrixFormat { Pgm, Ppm, Csv };

/// Decode a Netpbm bitmap (P1/P4) or graymap (P2/P5). Graymap values below
/// `threshold` become black. The result is never marked framed.
/// Throws ParseError naming the byte offset on malformed input.
BinaryImage load_binary_image(const std::vector<std::uint8_t>& bytes, int threshold = 128);

/// Guarantee an all-white border: returns the input (marked framed) when the
/// border is already white, otherwise a copy padded by a one-pixel white ring
/// (every coordinate shifts by +1). Idempotent.
BinaryImage ensure_frame(const BinaryImage& img);

/// Encode a locating matrix.
///   pgm: P2, maxval 3, cell codes verbatim
///   ppm: P6, exterior white, picture black, interior yellow, l-pixels magenta
///   csv: one line per row, comma-separated codes
std::vector<std::uint8_t> save_locating_matrix(const LocatingMatrix& m, MatrixFormat format);

/// Encode a bitmap as ASCII P1 (fixture pinning and test corpora).
std::vector<std::uint8_t> save_binary_p1(const BinaryImage& img);

} // namespace loci
