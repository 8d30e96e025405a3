/*
 * lectureseg - interest window selection tests
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include <doctest.h>

#include <map>

#include "lectureseg/window_select.hpp"
#include "synth.hpp"

using namespace lectureseg;

namespace {

BinaryImage speckle(std::uint64_t seed, int w, int h, double density, int x0 = 0, int y0 = 0,
                    int x1 = -1, int y1 = -1) {
  if (x1 < 0) x1 = w;
  if (y1 < 0) y1 = h;
  synth::Rng rng(seed);
  std::bernoulli_distribution on(density);
  BinaryImage b(w, h);
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) b.set(x, y, on(rng));
  return b;
}

void check_invariants(const BinaryImage& d, const WindowSet& ws) {
  const WindowGeometry g = window_geometry(d.width(), d.height());
  CHECK(ws.size() <= 6);
  std::map<Strip, int> per_strip;
  for (const auto& w : ws) {
    ++per_strip[w.strip];
    CHECK(w.w == 2 * w.h);
    CHECK(w.h == g.h);
    const auto [x0, x1] = strip_bounds(d.width(), w.strip);
    CHECK(w.x >= x0);
    CHECK(w.x + w.w <= x1);
    CHECK(w.y >= 0);
    CHECK(w.y + w.h <= d.height());
    const std::size_t cc = count_content(d, w.x, w.y, w.w, w.h);
    CHECK(w.cc == cc);
    CHECK(static_cast<double>(cc) >= 0.05 * w.w * w.h);
    CHECK(static_cast<double>(cc) <= 0.30 * w.w * w.h);
  }
  for (const auto& [_, n] : per_strip) CHECK(n <= 2);
  for (std::size_t i = 1; i < ws.size(); ++i) {
    const bool ordered =
        ws[i - 1].strip < ws[i].strip ||
        (ws[i - 1].strip == ws[i].strip && ws[i - 1].scan == Scan::TopDown && ws[i].scan == Scan::BottomUp);
    CHECK(ordered);
  }
}

}  // namespace

TEST_SUITE("window_select") {

TEST_CASE("geometry") {
  const WindowGeometry g = window_geometry(320, 240);
  CHECK(g.h == 24);
  CHECK(g.w == 48);
  CHECK(g.step == 12);
  CHECK(g.low == doctest::Approx(57.6));
  CHECK(g.high == doctest::Approx(345.6));
  CHECK(strip_bounds(320, Strip::Left) == std::pair{0, 106});
  CHECK(strip_bounds(320, Strip::Middle) == std::pair{106, 213});
  CHECK(strip_bounds(320, Strip::Right) == std::pair{213, 320});
}

TEST_CASE("empty frame gives no windows") {
  CHECK(select_windows(BinaryImage(320, 240)).empty());
}

TEST_CASE("content in one strip stays in that strip") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const BinaryImage d = speckle(seed, 320, 240, 0.15, 0, 0, 106, 240);
    const WindowSet ws = select_windows(d);
    CHECK((ws.size() == 1 || ws.size() == 2));
    for (const auto& w : ws) CHECK(w.strip == Strip::Left);
    check_invariants(d, ws);
  }
}

TEST_CASE("a patch reachable from both scans is reported once") {
  // Only the corner placement of the middle strip covers its first grid cell.
  BinaryImage d(320, 240);
  d.fill_rect(106, 0, 118, 12);
  const WindowSet ws = select_windows(d);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].strip == Strip::Middle);
  CHECK(ws[0].x == 106);
  CHECK(ws[0].y == 0);
  CHECK(ws[0].cc == 144);
  CHECK(ws[0].scan == Scan::TopDown);
}

TEST_CASE("two scans report opposite ends") {
  BinaryImage d(320, 240);
  d.fill_rect(20, 30, 60, 34);
  d.fill_rect(20, 200, 60, 204);
  const WindowSet ws = select_windows(d);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].scan == Scan::TopDown);
  CHECK(ws[1].scan == Scan::BottomUp);
  CHECK(ws[0].y < 40);
  CHECK(ws[1].y > 170);
}

TEST_CASE("clutter above the upper bound is rejected") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed)
    CHECK(select_windows(speckle(seed, 320, 240, 0.5)).empty());
}

TEST_CASE("invariants on writing-like content") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const BinaryImage d = synth::writing_content(seed, 1 + static_cast<int>(seed % 3));
    check_invariants(d, select_windows(d));
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const BinaryImage d = speckle(seed, 320, 240, 0.03 * static_cast<double>(seed));
    check_invariants(d, select_windows(d));
  }
}

TEST_CASE("shifting by a grid step shifts the windows") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const BinaryImage base = speckle(seed, 320, 240, 0.45, 142, 96, 154, 120);
    for (auto [dx, dy] : {std::pair{12, 0}, std::pair{0, 12}, std::pair{0, 24}}) {
      BinaryImage moved(320, 240);
      for (int y = 0; y < 240; ++y)
        for (int x = 0; x < 320; ++x)
          if (base.at(x, y)) moved.set(x + dx, y + dy);
      const WindowSet a = select_windows(base);
      const WindowSet b = select_windows(moved);
      REQUIRE(!a.empty());
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(b[i].x == a[i].x + dx);
        CHECK(b[i].y == a[i].y + dy);
        CHECK(b[i].cc == a[i].cc);
      }
    }
  }
}

}  // TEST_SUITE
