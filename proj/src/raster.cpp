#include "loci/raster.hpp"

#include <cctype>
#include <cstring>

namespace loci {

long long BinaryImage::black_count() const {
    long long n = 0;
    for (auto b : bits_) n += b;
    return n;
}

std::vector<Coord> BinaryImage::black_pixels() const {
    std::vector<Coord> out;
    for (int y = 1; y <= canvas_.rows; ++y)
        for (int x = 1; x <= canvas_.cols; ++x)
            if (black(y, x)) out.push_back({y, x});
    return out;
}

bool BinaryImage::border_all_white() const {
    for (int x = 1; x <= canvas_.cols; ++x)
        if (black(1, x) || black(canvas_.rows, x)) return false;
    for (int y = 1; y <= canvas_.rows; ++y)
        if (black(y, 1) || black(y, canvas_.cols)) return false;
    return true;
}

long long LocatingMatrix::count(CellClass c) const {
    long long n = 0;
    for (auto v : cells_)
        if (v == static_cast<std::uint8_t>(c)) ++n;
    return n;
}

std::vector<Coord> LocatingMatrix::cells_of(CellClass c) const {
    std::vector<Coord> out;
    for (int y = 1; y <= canvas_.rows; ++y)
        for (int x = 1; x <= canvas_.cols; ++x)
            if (at(y, x) == c) out.push_back({y, x});
    return out;
}

namespace {

// Netpbm header scanner. Comments run from '#' to end of line and are legal
// wherever whitespace is.
struct Scanner {
    const std::vector<std::uint8_t>& data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }
    int peek() const { return eof() ? -1 : data[pos]; }

    void skip_space() {
        while (!eof()) {
            int c = peek();
            if (c == '#') {
                while (!eof() && data[pos] != '\n') ++pos;
            } else if (std::isspace(c)) {
                ++pos;
            } else {
                break;
            }
        }
    }

    // Non-negative decimal integer.
    int read_int(const char* what) {
        skip_space();
        std::size_t start = pos;
        if (eof()) throw ParseError(std::string("truncated input: missing ") + what, pos);
        if (!std::isdigit(peek()))
            throw ParseError(std::string("malformed ") + what, start);
        long long v = 0;
        while (!eof() && std::isdigit(peek())) {
            v = v * 10 + (data[pos] - '0');
            if (v > 1'000'000'000LL)
                throw ParseError(std::string(what) + " out of range", start);
            ++pos;
        }
        return static_cast<int>(v);
    }
};

BinaryImage parse_ascii_bitmap(Scanner& s, int rows, int cols) {
    BinaryImage img({rows, cols});
    for (int y = 1; y <= rows; ++y) {
        for (int x = 1; x <= cols; ++x) {
            s.skip_space();
            if (s.eof()) throw ParseError("truncated payload: ran out of bits", s.pos);
            int c = s.data[s.pos];
            if (c != '0' && c != '1')
                throw ParseError("malformed payload: expected 0 or 1", s.pos);
            if (c == '1') img.set_black(y, x);
            ++s.pos;
        }
    }
    return img;
}

BinaryImage parse_ascii_graymap(Scanner& s, int rows, int cols, int maxval, int threshold) {
    BinaryImage img({rows, cols});
    for (int y = 1; y <= rows; ++y) {
        for (int x = 1; x <= cols; ++x) {
            std::size_t at = s.pos;
            int v = s.read_int("gray value");
            if (v > maxval) throw ParseError("malformed payload: gray value above maxval", at);
            if (v < threshold) img.set_black(y, x);
        }
    }
    return img;
}

BinaryImage parse_packed_bitmap(Scanner& s, int rows, int cols) {
    BinaryImage img({rows, cols});
    std::size_t row_bytes = static_cast<std::size_t>((cols + 7) / 8);
    for (int y = 1; y <= rows; ++y) {
        if (s.pos + row_bytes > s.data.size())
            throw ParseError("truncated payload: missing packed row", s.data.size());
        for (int x = 1; x <= cols; ++x) {
            std::uint8_t byte = s.data[s.pos + static_cast<std::size_t>((x - 1) / 8)];
            int bit = (byte >> (7 - (x - 1) % 8)) & 1; // most significant bit first
            if (bit) img.set_black(y, x);
        }
        s.pos += row_bytes;
    }
    return img;
}

BinaryImage parse_raw_graymap(Scanner& s, int rows, int cols, int threshold) {
    BinaryImage img({rows, cols});
    std::size_t need = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (s.pos + need > s.data.size())
        throw ParseError("truncated payload: missing gray bytes", s.data.size());
    for (int y = 1; y <= rows; ++y)
        for (int x = 1; x <= cols; ++x) {
            if (s.data[s.pos++] < threshold) img.set_black(y, x);
        }
    return img;
}

void append(std::vector<std::uint8_t>& out, const std::string& text) {
    out.insert(out.end(), text.begin(), text.end());
}

} // namespace

BinaryImage load_binary_image(const std::vector<std::uint8_t>& bytes, int threshold) {
    Scanner s{bytes};
    if (bytes.size() < 2) throw ParseError("truncated header: missing magic number", 0);
    char m0 = static_cast<char>(bytes[0]);
    char m1 = static_cast<char>(bytes[1]);
    if (m0 != 'P' || m1 < '1' || m1 > '7')
        throw ParseError("malformed header: not a Netpbm file", 0);
    if (m1 == '3' || m1 == '6' || m1 == '7')
        throw ParseError(std::string("unsupported magic number P") + m1 +
                             ": only bitmaps and graymaps are accepted",
                         0);
    s.pos = 2;

    int cols = s.read_int("width");
    int rows = s.read_int("height");
    if (rows < 1 || cols < 1) throw ParseError("malformed header: non-positive dimensions", 2);

    switch (m1) {
    case '1':
        return parse_ascii_bitmap(s, rows, cols);
    case '2': {
        int maxval = s.read_int("maxval");
        if (maxval < 1) throw ParseError("malformed header: bad maxval", s.pos);
        return parse_ascii_graymap(s, rows, cols, maxval, threshold);
    }
    case '4': {
        if (s.eof() || !std::isspace(s.peek()))
            throw ParseError("malformed header: missing separator before payload", s.pos);
        ++s.pos;
        return parse_packed_bitmap(s, rows, cols);
    }
    default: { // '5'
        std::size_t at = s.pos;
        int maxval = s.read_int("maxval");
        if (maxval < 1) throw ParseError("malformed header: bad maxval", at);
        if (maxval > 255)
            throw ParseError("unsupported maxval above 255", at);
        if (s.eof() || !std::isspace(s.peek()))
            throw ParseError("malformed header: missing separator before payload", s.pos);
        ++s.pos;
        return parse_raw_graymap(s, rows, cols, threshold);
    }
    }
}

BinaryImage ensure_frame(const BinaryImage& img) {
    if (img.border_all_white()) {
        BinaryImage out = img;
        out.set_framed(true);
        return out;
    }
    BinaryImage out({img.rows() + 2, img.cols() + 2}, true);
    for (int y = 1; y <= img.rows(); ++y)
        for (int x = 1; x <= img.cols(); ++x)
            if (img.black(y, x)) out.set_black(y + 1, x + 1);
    return out;
}

std::vector<std::uint8_t> save_locating_matrix(const LocatingMatrix& m, MatrixFormat format) {
    std::vector<std::uint8_t> out;
    const int rows = m.rows(), cols = m.cols();
    switch (format) {
    case MatrixFormat::Pgm: {
        append(out, "P2\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n3\n");
        for (int y = 1; y <= rows; ++y) {
            std::string line;
            for (int x = 1; x <= cols; ++x) {
                if (x > 1) line += ' ';
                line += static_cast<char>('0' + static_cast<int>(m.at(y, x)));
            }
            line += '\n';
            append(out, line);
        }
        break;
    }
    case MatrixFormat::Ppm: {
        append(out, "P6\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n");
        static constexpr std::uint8_t palette[4][3] = {
            {255, 255, 255}, // exterior
            {0, 0, 0},       // picture
            {255, 255, 0},   // interior
            {255, 0, 255},   // l-pixel
        };
        for (int y = 1; y <= rows; ++y)
            for (int x = 1; x <= cols; ++x) {
                const auto& rgb = palette[static_cast<int>(m.at(y, x))];
                out.insert(out.end(), rgb, rgb + 3);
            }
        break;
    }
    case MatrixFormat::Csv: {
        for (int y = 1; y <= rows; ++y) {
            std::string line;
            for (int x = 1; x <= cols; ++x) {
                if (x > 1) line += ',';
                line += static_cast<char>('0' + static_cast<int>(m.at(y, x)));
            }
            line += '\n';
            append(out, line);
        }
        break;
    }
    }
    return out;
}

std::vector<std::uint8_t> save_binary_p1(const BinaryImage& img) {
    std::vector<std::uint8_t> out;
    append(out, "P1\n" + std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n");
    for (int y = 1; y <= img.rows(); ++y) {
        std::string line;
        for (int x = 1; x <= img.cols(); ++x) {
            if (x > 1) line += ' ';
            line += img.black(y, x) ? '1' : '0';
        }
        line += '\n';
        append(out, line);
    }
    return out;
}

} // namespace loci
