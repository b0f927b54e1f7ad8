#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loci/cotra.hpp"
#include "loci/oracle.hpp"
#include "loci/raster.hpp"
#include "loci/scanfill.hpp"

namespace {

constexpr int kExitUsage = 2;

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>());
}

// Write through a temp file and rename, so a crashed run never leaves a
// truncated matrix under the final name.
void write_file_atomic(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

const char* extension(loci::MatrixFormat f) {
    switch (f) {
    case loci::MatrixFormat::Pgm: return "pgm";
    case loci::MatrixFormat::Ppm: return "ppm";
    default: return "csv";
    }
}

std::vector<loci::MatrixFormat> parse_formats(const std::string& list) {
    std::vector<loci::MatrixFormat> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "pgm")
            out.push_back(loci::MatrixFormat::Pgm);
        else if (item == "ppm")
            out.push_back(loci::MatrixFormat::Ppm);
        else if (item == "csv")
            out.push_back(loci::MatrixFormat::Csv);
        else
            throw CLI::ValidationError("--format", "unknown format '" + item + "'");
    }
    if (out.empty()) throw CLI::ValidationError("--format", "empty format list");
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct FillArgs {
    std::string input;
    bool cotra = false;
    bool interactive = false;
    int threshold = 128;
    std::string out_prefix;
    std::string formats = "ppm";
};

int run_fill(const FillArgs& a) {
    auto bytes = read_file(a.input);
    loci::BinaryImage img = loci::ensure_frame(loci::load_binary_image(bytes, a.threshold));

    auto formats = parse_formats(a.formats);
    std::string prefix = a.out_prefix.empty()
                             ? std::filesystem::path(a.input).stem().string()
                             : a.out_prefix;

    std::cout << "input: " << a.input << "\n";
    std::cout << "canvas: " << img.rows() << " " << img.cols() << "\n";

    // Timing covers fill work only: the image is already resident and the
    // clock stops before any encoding or file output.
    bool fua_ok = true;
    auto t0 = std::chrono::steady_clock::now();
    try {
        loci::LocatingMatrix fua = loci::fua_fill(img);
        double fua_seconds = seconds_since(t0);
        std::cout << "fua_seconds: " << fua_seconds << "\n";
        std::cout << "fua_interior_cells: " << fua.count(loci::CellClass::Interior) << "\n";
        for (auto f : formats) {
            std::string path = prefix + ".fua." + extension(f);
            write_file_atomic(path, loci::save_locating_matrix(fua, f));
            std::cout << "wrote: " << path << "\n";
        }
    } catch (const loci::MalformedCurveError& e) {
        // The picture breaks the thin-curve assumptions of the plain
        // scanline pass; the curve-reduction fill still applies.
        fua_ok = false;
        std::cerr << "warning: " << e.what() << "\n";
    }

    bool want_cotra = a.cotra;
    if (a.interactive) {
        std::cout << "Try CoTRA? Yes = 1; No = any key" << std::endl;
        std::string answer;
        std::getline(std::cin, answer);
        if (answer == "1") want_cotra = true;
    }
    if (!want_cotra) return fua_ok ? 0 : kExitUsage;

    t0 = std::chrono::steady_clock::now();
    loci::CotraResult res = loci::cotra_fill(img);
    double cotra_seconds = seconds_since(t0);
    std::cout << "cotra_seconds: " << cotra_seconds << "\n";
    std::cout << "cotra_interior_cells: " << res.matrix.count(loci::CellClass::Interior) << "\n";
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    for (auto f : formats) {
        std::string path = prefix + ".cotra." + extension(f);
        write_file_atomic(path, loci::save_locating_matrix(res.matrix, f));
        std::cout << "wrote: " << path << "\n";
    }
    return 0;
}

struct LocateArgs {
    std::string input;
    int y = 0;
    int x = 0;
    bool cotra = false;
    int threshold = 128;
};

int run_locate(const LocateArgs& a) {
    auto bytes = read_file(a.input);
    loci::BinaryImage img = loci::ensure_frame(loci::load_binary_image(bytes, a.threshold));
    if (a.y < 1 || a.y > img.rows() || a.x < 1 || a.x > img.cols()) {
        std::cerr << "error: coordinates (" << a.y << "," << a.x
                  << ") outside the framed canvas " << img.rows() << "x" << img.cols() << "\n"
                  << "usage: loci locate <input> <y> <x> [--cotra]\n";
        return kExitUsage;
    }
    loci::LocatingMatrix m;
    if (a.cotra) {
        loci::CotraResult res = loci::cotra_fill(img);
        for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
        m = std::move(res.matrix);
    } else {
        m = loci::fua_fill(img);
    }
    switch (m.at(a.y, a.x)) {
    case loci::CellClass::Exterior: std::cout << "EXTERIOR\n"; break;
    case loci::CellClass::Picture: std::cout << "PICTURE\n"; break;
    case loci::CellClass::Interior: std::cout << "INTERIOR\n"; break;
    case loci::CellClass::LPixel: std::cout << "LPIXEL\n"; break;
    }
    return 0;
}

struct BenchArgs {
    std::string sizes = "64,128,256";
    std::string kind = "rectilinear";
    int reps = 3;
};

int run_bench(const BenchArgs& a) {
    std::vector<int> sides;
    {
        std::stringstream ss(a.sizes);
        std::string item;
        int prev = 0;
        while (std::getline(ss, item, ',')) {
            int v = std::stoi(item);
            if (v < 8 || v <= prev)
                throw CLI::ValidationError("--sizes", "sizes must be >= 8 and strictly increasing");
            sides.push_back(v);
            prev = v;
        }
    }
    loci::PictureKind kind;
    if (a.kind == "rectilinear")
        kind = loci::PictureKind::RectilinearSimple;
    else if (a.kind == "random")
        kind = loci::PictureKind::RandomConnected;
    else if (a.kind == "degenerate")
        kind = loci::PictureKind::Degenerate;
    else
        throw CLI::ValidationError("--kind", "expected rectilinear, random or degenerate");

    std::cout << "pixels,fua_seconds_mean,fua_steps,cotra_seconds_mean,cotra_steps,interior_cells\n";
    for (int side : sides) {
        loci::BinaryImage img = loci::gen_test_picture(1, side, side, kind);
        double fua_total = 0, cotra_total = 0;
        loci::FillStats fua_stats, cotra_stats;
        long long interior = 0;
        for (int r = 0; r < a.reps; ++r) {
            loci::FillStats fs;
            auto t0 = std::chrono::steady_clock::now();
            loci::LocatingMatrix m = loci::fua_fill(img, &fs);
            fua_total += seconds_since(t0);
            if (r == 0) fua_stats = fs;

            loci::FillStats cs;
            t0 = std::chrono::steady_clock::now();
            loci::CotraResult res = loci::cotra_fill(img, &cs);
            cotra_total += seconds_since(t0);
            if (r == 0) {
                cotra_stats = cs;
                interior = res.matrix.count(loci::CellClass::Interior);
            }
        }
        std::cout << 1LL * side * side << "," << fua_total / a.reps << "," << fua_stats.steps
                  << "," << cotra_total / a.reps << "," << cotra_stats.steps << "," << interior
                  << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integer-only region filling and point location for binary rasters"};
    app.require_subcommand(1);

    FillArgs fill_args;
    auto* fill = app.add_subcommand("fill", "Fill a picture and write locating matrices");
    fill->add_option("input", fill_args.input, "Netpbm input (P1/P2/P4/P5)")->required();
    fill->add_flag("--cotra", fill_args.cotra, "Also run the curve-reduction fill");
    fill->add_flag("--interactive", fill_args.interactive, "Ask whether to run it");
    fill->add_option("--threshold", fill_args.threshold, "Graymap black threshold (0-255)")
        ->check(CLI::Range(0, 255));
    fill->add_option("--out", fill_args.out_prefix, "Output path prefix");
    fill->add_option("--format", fill_args.formats, "Comma list of pgm,ppm,csv");

    LocateArgs locate_args;
    auto* locate = app.add_subcommand("locate", "Classify one pixel of the framed canvas");
    locate->add_option("input", locate_args.input)->required();
    locate->add_option("y", locate_args.y)->required();
    locate->add_option("x", locate_args.x)->required();
    locate->add_flag("--cotra", locate_args.cotra);
    locate->add_option("--threshold", locate_args.threshold)->check(CLI::Range(0, 255));

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time the fills over generated pictures");
    bench->add_option("--sizes", bench_args.sizes, "Comma list of canvas side lengths");
    bench->add_option("--kind", bench_args.kind, "rectilinear, random or degenerate");
    bench->add_option("--reps", bench_args.reps, "Repetitions per size")->check(CLI::Range(1, 100));

    try {
        app.parse(argc, argv);
        if (fill->parsed()) return run_fill(fill_args);
        if (locate->parsed()) return run_locate(locate_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
