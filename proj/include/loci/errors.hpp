#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loci {

// Netpbm decoding failure. `offset` is the byte position that made the input
// unusable (start of the offending token, or end of data when truncated).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Input picture has no fillable area: a single pixel, a bare one-wide
// segment, or anything whose traced outline collapses when pruned.
class DegenerateInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A scanline run whose vertical attachments cannot come from a thin
// spike-free closed curve. Signals that the raw input needs the curve
// reduction pass before filling.
class MalformedCurveError : public std::runtime_error {
public:
    MalformedCurveError(const std::string& what, int row) : std::runtime_error(what), row_(row) {}

    int row() const { return row_; }

private:
    int row_;
};

} // namespace loci
