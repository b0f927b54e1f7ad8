#include <doctest.h>

#include <random>
#include <set>

#include "loci/cotra.hpp"
#include "loci/oracle.hpp"
#include "loci/scanfill.hpp"
#include "test_util.hpp"

using namespace loci;
using namespace loci::testutil;

TEST_CASE("find_io_pixels marks entries and exits") {
    auto img = img_from({".......", ".##..#.", "......."});
    auto rm = find_io_pixels(img, 2);
    REQUIRE(rm.marks.size() == 4);
    CHECK(rm.marks[0] == Mark{1, MarkKind::Entry});
    CHECK(rm.marks[1] == Mark{4, MarkKind::Exit});
    CHECK(rm.marks[2] == Mark{5, MarkKind::Entry});
    CHECK(rm.marks[3] == Mark{7, MarkKind::Exit});
}

TEST_CASE("find_io_pixels marks a shared entry-exit pixel") {
    auto img = img_from({".....", ".#.#.", "....."});
    auto rm = find_io_pixels(img, 2);
    REQUIRE(rm.marks.size() == 3);
    CHECK(rm.marks[0] == Mark{1, MarkKind::Entry});
    CHECK(rm.marks[1] == Mark{3, MarkKind::Both});
    CHECK(rm.marks[2] == Mark{5, MarkKind::Exit});
}

TEST_CASE("find_io_pixels on an all-white row") {
    auto img = img_from({"....", "....", "...."});
    CHECK(find_io_pixels(img, 2).marks.empty());
}

TEST_CASE("entry and exit counts balance on framed rows") {
    std::mt19937 rng(31);
    for (int t = 0; t < 30; ++t) {
        BinaryImage img({10, 12});
        for (int y = 2; y <= 9; ++y)
            for (int x = 2; x <= 11; ++x)
                if (rng() % 3 == 0) img.set_black(y, x);
        img.set_framed(true);
        for (int y = 1; y <= 10; ++y) {
            auto rm = find_io_pixels(img, y);
            int entries = 0, exits = 0;
            for (const Mark& m : rm.marks) {
                if (m.kind != MarkKind::Exit) ++entries;
                if (m.kind != MarkKind::Entry) ++exits;
            }
            CHECK(entries == exits);
            if (!rm.marks.empty()) {
                CHECK(rm.marks.front().kind != MarkKind::Exit);
                CHECK(rm.marks.back().kind != MarkKind::Entry);
            }
            for (std::size_t i = 1; i < rm.marks.size(); ++i)
                CHECK(rm.marks[i - 1].col < rm.marks[i].col);
        }
    }
}

TEST_CASE("classify_run hand cases") {
    // vertical strip crossing the row
    auto strip = img_from({".....", "..#..", "..#..", "..#..", "....."});
    CHECK(classify_run(strip, {3, 3, 3}) == RunClass::Crossing);

    // bottom edge of a rectangle: attachments only above
    auto rect = img_from({"......", ".####.", ".#..#.", ".####.", "......"});
    CHECK(classify_run(rect, {4, 2, 5}) == RunClass::Extremum);
    CHECK(classify_run(rect, {2, 2, 5}) == RunClass::Extremum);
    CHECK(classify_run(rect, {3, 2, 2}) == RunClass::Crossing);

    // isolated stretches attach nowhere and toggle nothing
    auto lone = img_from({".....", ".##..", "....."});
    CHECK(classify_run(lone, {2, 2, 3}) == RunClass::Extremum);
}

TEST_CASE("classify_run rejects runs with too many attachments") {
    // two stubs above and two below one run
    auto img = img_from({".......",
                         ".#...#.",
                         ".#####.",
                         ".#...#.",
                         "......."});
    CHECK_THROWS_AS(classify_run(img, {3, 2, 6}), MalformedCurveError);
    try {
        classify_run(img, {3, 2, 6});
    } catch (const MalformedCurveError& e) {
        CHECK(e.row() == 3);
    }
}

TEST_CASE("w-shaped outline: the middle valley is an extremum") {
    // Two prongs with a valley between them. The scanline through the
    // valley floor sees crossing walls flanking an extremum run.
    auto w = img_from({".............",
                       ".####...####.",
                       ".#..#...#..#.",
                       ".#..#####..#.",
                       ".#.........#.",
                       ".###########.",
                       "............."});
    auto runs = black_runs(w, 4);
    REQUIRE(runs.size() == 3);
    CHECK(classify_run(w, runs[0]) == RunClass::Crossing);
    CHECK(classify_run(w, runs[1]) == RunClass::Extremum);
    CHECK(classify_run(w, runs[2]) == RunClass::Crossing);

    auto interior = oracle_interior(w);
    auto m = fua_fill(w);
    CHECK(coord_set(m.cells_of(CellClass::Interior)) == interior);
    CHECK(m.at(3, 6) == CellClass::Exterior); // valley notch opens upward
    CHECK(m.at(5, 6) == CellClass::Interior);
}

TEST_CASE("fua_fill on the ring fills exactly the centre") {
    auto ring = img_from({".....", ".###.", ".#.#.", ".###.", "....."});
    auto m = fua_fill(ring);
    CHECK(m.count(CellClass::Interior) == 1);
    CHECK(m.at(3, 3) == CellClass::Interior);
    CHECK(m.at(2, 2) == CellClass::Picture);
    CHECK(m.at(1, 1) == CellClass::Exterior);
}

TEST_CASE("fua_fill degenerate pictures have no interior") {
    auto single = img_from({"...", ".#.", "..."});
    CHECK(fua_fill(single).count(CellClass::Interior) == 0);

    auto seg = img_from({".....", ".###.", "....."});
    CHECK(fua_fill(seg).count(CellClass::Interior) == 0);
}

TEST_CASE("fua_fill never misclassifies black or frame cells") {
    std::mt19937 rng(41);
    for (int t = 0; t < 30; ++t) {
        BinaryImage img = gen_test_picture(static_cast<unsigned>(t), 16, 16,
                                           PictureKind::RectilinearSimple);
        auto m = fua_fill(img);
        for (int y = 1; y <= 16; ++y)
            for (int x = 1; x <= 16; ++x) {
                if (img.black(y, x)) CHECK(m.at(y, x) == CellClass::Picture);
                if (y == 1 || y == 16 || x == 1 || x == 16)
                    CHECK(m.at(y, x) == CellClass::Exterior);
            }
    }
}

TEST_CASE("fua_fill matches the flood oracle on thin outlines") {
    for (unsigned seed = 100; seed < 140; ++seed) {
        BinaryImage img = gen_test_picture(seed, 24, 24, PictureKind::RectilinearSimple);
        auto m = fua_fill(img);
        CHECK(coord_set(m.cells_of(CellClass::Interior)) == oracle_interior(img));
    }
}

TEST_CASE("fua_fill agrees with the flood oracle on rasterized outlines") {
    // The outlines traced from these pictures have no merged corridor runs,
    // so the image-level pass applies to their rasters directly.
    std::vector<BinaryImage> pictures;
    pictures.push_back(img_from({".....", ".###.", ".#.#.", ".###.", "....."}));
    pictures.push_back(img_from({"......", "......", "..#...", "...#..", "......", "......"}));
    for (unsigned seed = 0; seed < 20; ++seed)
        pictures.push_back(gen_test_picture(seed, 20, 20, PictureKind::RectilinearSimple));
    for (const auto& img : pictures) {
        auto curve = prune_spikes(repair_trapped_lpixels(trace_lego_curve(img), img));
        BinaryImage scratch(img.canvas(), true);
        for (const Coord& p : curve.points) scratch.set_black(p);
        auto m = fua_fill(scratch);
        CHECK(coord_set(m.cells_of(CellClass::Interior)) == oracle_interior(scratch));
    }
}

TEST_CASE("step counter stays linear in the pixel count") {
    std::vector<std::uint64_t> steps;
    for (int side : {32, 64, 128}) {
        BinaryImage img = gen_test_picture(1, side, side, PictureKind::RectilinearSimple);
        FillStats st;
        fua_fill(img, &st);
        steps.push_back(st.steps);
    }
    // quadrupling the pixels must not grow work more than ~4x
    CHECK(static_cast<double>(steps[1]) / static_cast<double>(steps[0]) < 4.6);
    CHECK(static_cast<double>(steps[2]) / static_cast<double>(steps[1]) < 4.6);
}

TEST_CASE("parity_fill requires a framed image") {
    auto img = img_from({"##", "##"});
    CHECK_THROWS_AS(fua_fill(img), std::invalid_argument);
}
