/*
 * lectureseg - writing extraction tests
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include <doctest.h>

#include <cstdlib>

#include "lectureseg/content_filter.hpp"
#include "lectureseg/errors.hpp"
#include "lectureseg/morphology.hpp"
#include "lectureseg/pixel_classes.hpp"
#include "synth.hpp"

using namespace lectureseg;

namespace {

constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kWhite{255, 255, 255};
constexpr Rgb kBrown{120, 80, 40};

// Direct 3x3 convolution with {0,-1,0; -1,4,-1; 0,-1,0}; frame border unset.
BinaryImage laplacian_oracle(const Raster& r, int threshold) {
  static const int k[3][3] = {{0, -1, 0}, {-1, 4, -1}, {0, -1, 0}};
  BinaryImage out(r.width(), r.height());
  for (int y = 1; y + 1 < r.height(); ++y)
    for (int x = 1; x + 1 < r.width(); ++x) {
      int acc = 0;
      for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) acc += k[j][i] * luma(r.at(x + i - 1, y + j - 1));
      out.set(x, y, std::abs(acc) >= threshold);
    }
  return out;
}

bool subset(const BinaryImage& a, const BinaryImage& b) {
  return (a & b) == a;
}

Raster textured_board(std::uint64_t seed, int w = 320, int h = 240) {
  synth::Rng rng(seed);
  Raster r(w, h);
  for (Rgb& p : r.pixels()) p = synth::jitter(synth::kBoardGreen, 5, rng);
  return r;
}

}  // namespace

TEST_SUITE("content_filter") {

TEST_CASE("laplacian on constant and impulse images") {
  CHECK(laplacian_edge(Raster(40, 30, Rgb{90, 140, 20}), 24).popcount() == 0);

  Raster dot(7, 7, kBlack);
  dot.at(3, 3) = kWhite;
  BinaryImage expect(7, 7);
  for (auto [x, y] : {std::pair{3, 3}, {2, 3}, {4, 3}, {3, 2}, {3, 4}}) expect.set(x, y);
  CHECK(laplacian_edge(dot, 24) == expect);
  CHECK(laplacian_oracle(dot, 24) == expect);
}

TEST_CASE("laplacian on a vertical step") {
  Raster step(8, 8, kBlack);
  step.fill_rect(4, 0, 8, 8, kWhite);
  const BinaryImage e = laplacian_edge(step, 24);
  BinaryImage expect(8, 8);
  expect.fill_rect(3, 1, 5, 7);
  CHECK(e == expect);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Raster r = synth::board_fixture(seed).raster;
    CHECK(laplacian_edge(r, 24) == laplacian_oracle(r, 24));
  }
}

TEST_CASE("writing edges split by polarity") {
  Raster dot(7, 7, kBlack);
  dot.at(3, 3) = kWhite;
  const BinaryImage bright = writing_edge(dot, 24, InkPolarity::Bright);
  const BinaryImage dark = writing_edge(dot, 24, InkPolarity::Dark);
  CHECK(bright.popcount() == 1);
  CHECK(bright.at(3, 3));
  CHECK(dark.popcount() == 4);
  CHECK((bright | dark) == laplacian_edge(dot, 24));
}

TEST_CASE("similarity suppression") {
  const FilterParams fp;
  SUBCASE("border between two flat regions") {
    Raster r(60, 40, Rgb{40, 100, 60});
    r.fill_rect(30, 0, 60, 40, Rgb{205, 192, 168});
    const BinaryImage e = laplacian_edge(r, fp.edge_threshold);
    REQUIRE(e.popcount() > 0);
    CHECK(color_similarity_suppress(e, r, fp).popcount() == 0);
  }
  SUBCASE("horizontal border as well") {
    Raster r(60, 40, Rgb{40, 100, 60});
    r.fill_rect(0, 20, 60, 40, Rgb{205, 192, 168});
    const BinaryImage e = laplacian_edge(r, fp.edge_threshold);
    REQUIRE(e.popcount() > 0);
    CHECK(color_similarity_suppress(e, r, fp).popcount() == 0);
  }
  SUBCASE("thin strokes survive") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      Raster r = textured_board(seed);
      synth::Rng rng(seed + 100);
      BinaryImage ink(320, 240);
      // Separated two-pixel strokes: horizontal, vertical and diagonal.
      synth::draw_strokes(ink, {{30, 40, 120, 40}, {200, 30, 200, 110}, {40, 150, 110, 210},
                                {180, 190, 290, 150}},
                          2);
      for (int y = 0; y < 240; ++y)
        for (int x = 0; x < 320; ++x)
          if (ink.at(x, y)) r.at(x, y) = synth::jitter(synth::kChalk, 5, rng);
      const BinaryImage f = writing_edge(r, fp.edge_threshold, InkPolarity::Bright);
      REQUIRE(f.popcount() > 0);
      CHECK(color_similarity_suppress(f, r, fp).popcount() == f.popcount());
    }
  }
  SUBCASE("empty edges") {
    const Raster r = synth::board_fixture(1).raster;
    CHECK(color_similarity_suppress(BinaryImage(320, 240), r, fp).popcount() == 0);
  }
  SUBCASE("size mismatch") {
    CHECK_THROWS_AS(color_similarity_suppress(BinaryImage(10, 10), Raster(11, 10), fp),
                    DimensionMismatch);
  }
}

TEST_CASE("board flood") {
  const ClassifierParams cp;
  const FilterParams fp;
  const Raster green(80, 60, synth::kBoardGreen);
  CHECK(flood_board(green, BinaryImage(80, 60), cp, fp).popcount() == 80u * 60u);

  CHECK_THROWS_AS(flood_board(Raster(80, 60, kBrown), BinaryImage(80, 60), cp, fp), NoBoardFound);

  // Chalk holes are filled back into the board mask.
  Raster chalked = green;
  chalked.fill_rect(20, 20, 40, 23, synth::kChalk);
  chalked.fill_rect(50, 30, 53, 45, synth::kChalk);
  chalked.fill_rect(0, 0, 80, 6, kBrown);  // wall above
  const BinaryImage mask = flood_board(chalked, laplacian_edge(chalked, fp.edge_threshold), cp, fp);
  BinaryImage board(80, 60);
  board.fill_rect(0, 6, 80, 60);
  BinaryImage strokes(80, 60);
  strokes.fill_rect(20, 20, 40, 23);
  strokes.fill_rect(50, 30, 53, 45);
  CHECK(subset(strokes, mask));
  CHECK(subset(mask, board));
  CHECK(mask.popcount() >= board.popcount() - 2 * 80);

  // Regions within 80% of the largest are all kept.
  Raster two(100, 40, synth::kBoardGreen);
  two.fill_rect(48, 0, 52, 40, kBrown);
  CHECK(flood_board(two, BinaryImage(100, 40), cp, fp).popcount() == 96u * 40u);
  Raster lopsided(100, 40, synth::kBoardGreen);
  lopsided.fill_rect(30, 0, 34, 40, kBrown);
  const BinaryImage big = flood_board(lopsided, BinaryImage(100, 40), cp, fp);
  CHECK(big.popcount() == 66u * 40u);
  CHECK_FALSE(big.at(10, 10));
}

TEST_CASE("sheet flood") {
  const ClassifierParams cp;
  const FilterParams fp;
  CHECK(flood_sheet(Raster(80, 60, synth::kPaper), BinaryImage(80, 60), cp, fp).popcount() ==
        80u * 60u);
  CHECK_THROWS_AS(flood_sheet(Raster(80, 60, synth::kBoardGreen), BinaryImage(80, 60), cp, fp),
                  NoSheetFound);
}

TEST_CASE("denoise") {
  BinaryImage speck(20, 20);
  speck.set(10, 10);
  CHECK(morph_denoise(speck).popcount() == 0);
  CHECK(morph_denoise(BinaryImage(20, 20)).popcount() == 0);

  BinaryImage stroke(60, 20);
  stroke.fill_rect(5, 8, 55, 11);
  const BinaryImage d = morph_denoise(stroke);
  CHECK((d & stroke).popcount() >= static_cast<std::size_t>(0.95 * static_cast<double>(stroke.popcount())));

  // Majority rule written out per pixel.
  synth::Rng rng(4);
  BinaryImage noise(30, 30);
  for (int y = 0; y < 30; ++y)
    for (int x = 0; x < 30; ++x) noise.set(x, y, rng() % 3 == 0);
  const BinaryImage got = morph_denoise(noise);
  for (int y = 0; y < 30; ++y)
    for (int x = 0; x < 30; ++x) {
      int n = 0;
      for (int j = -1; j <= 1; ++j)
        for (int i = -1; i <= 1; ++i) n += (i || j) && noise.get_or(x + i, y + j, false);
      CHECK(got.at(x, y) == (n >= 3 || (noise.at(x, y) && n >= 2)));
    }
}

TEST_CASE("restore") {
  BinaryImage dashed(40, 10);
  for (int x = 4; x < 36; ++x)
    if (x % 3 != 0) dashed.set(x, 5);
  REQUIRE(label_components(dashed, Connectivity::Eight).areas.size() > 1);
  const BinaryImage closed = morph_restore(dashed);
  CHECK(label_components(closed, Connectivity::Eight).areas.size() == 1);
  CHECK(subset(dashed, closed));

  CHECK(morph_restore(BinaryImage(10, 10)).popcount() == 0);
  BinaryImage block(20, 20);
  block.fill_rect(5, 5, 12, 15);
  CHECK(morph_restore(block) == block);
}

TEST_CASE("large blob removal") {
  const double a_max = 0.005 * 200 * 200;  // 200 pixels
  BinaryImage exact(200, 200);
  exact.fill_rect(10, 10, 30, 20);  // 20 x 10
  CHECK(remove_large_blobs(exact, a_max) == exact);
  BinaryImage over = exact;
  over.set(30, 19);
  CHECK(remove_large_blobs(over, a_max).popcount() == 0);

  const BinaryImage scatter = synth::writing_content(3, 1, 200, 200);
  BinaryImage small = remove_large_blobs(scatter, a_max);
  CHECK(remove_large_blobs(small, a_max) == small);
  BinaryImage dots(200, 200);
  for (int y = 2; y < 200; y += 5)
    for (int x = 2; x < 200; x += 5) dots.fill_rect(x, y, x + 2, y + 3);
  CHECK(remove_large_blobs(dots, a_max) == dots);
  CHECK(remove_large_blobs(remove_large_blobs(over, a_max), a_max) == remove_large_blobs(over, a_max));
}

TEST_CASE("board extraction fidelity") {
  const Config cfg;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto fx = synth::board_fixture(seed);
    const ContentExtraction ex = extract_board_content(fx.raster, cfg, true);
    CHECK(synth::f1_score(ex.content, fx.truth, 1) >= 0.90);
    CHECK(ex.trace.keys() == std::vector<char>{'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j', 'k'});
    for (const auto& [key, stage] : ex.trace.stages) {
      CHECK(stage.width() == 320);
      CHECK(stage.height() == 240);
    }
    const auto& st = ex.trace.stages;
    CHECK(subset(ex.content, st.at('e')));
    CHECK(subset(ex.content, st.at('i')));
    CHECK(extract_board_content(fx.raster, cfg).content == ex.content);
  }
}

TEST_CASE("board extraction ignores occluders and blank boards") {
  const Config cfg;
  CHECK(extract_board_content(Raster(320, 240, synth::kBoardGreen), cfg).content.popcount() == 0);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto fx = synth::board_fixture(seed, true);
    const ContentExtraction ex = extract_board_content(fx.raster, cfg);
    BinaryImage occluder(320, 240);
    // Any non-green run reaching the bottom edge below the writing belongs to the occluder.
    for (int x = 0; x < 320; ++x) {
      if (is_green(fx.raster.at(x, 239), cfg.classifier)) continue;
      for (int y = 239; y >= 0 && !is_green(fx.raster.at(x, y), cfg.classifier); --y) occluder.set(x, y);
    }
    REQUIRE(occluder.popcount() > 0);
    CHECK((ex.content & occluder).popcount() == 0);
    CHECK(synth::f1_score(ex.content, fx.truth, 1) >= 0.90);
  }
  CHECK_THROWS_AS(extract_board_content(Raster(320, 240, kBrown), cfg), NoBoardFound);
}

TEST_CASE("sheet extraction") {
  const Config cfg;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto fx = synth::sheet_fixture(seed);
    const ContentExtraction ex = extract_sheet_content(fx.raster, cfg, true);
    CHECK(synth::f1_score(ex.content, fx.truth) >= 0.95);
    CHECK(ex.trace.keys() == std::vector<char>{'a', 'b', 'c', 'd', 'e', 'f', 'j', 'k'});
    const auto& st = ex.trace.stages;
    CHECK(subset(ex.content, st.at('e') & st.at('f')));
  }
  CHECK(extract_sheet_content(Raster(320, 240, synth::kPaper), cfg).content.popcount() == 0);
  CHECK_THROWS_AS(extract_sheet_content(Raster(320, 240, synth::kBoardGreen), cfg), NoSheetFound);
}

}  // TEST_SUITE
