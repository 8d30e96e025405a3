/*
 * lectureseg - binary image and morphology tests
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include <doctest.h>

#include <algorithm>

#include <opencv2/imgproc.hpp>

#include "lectureseg/morphology.hpp"
#include "synth.hpp"

using namespace lectureseg;

namespace {

BinaryImage random_mask(std::uint64_t seed, int w, int h, double density) {
  synth::Rng rng(seed);
  std::bernoulli_distribution on(density);
  BinaryImage b(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) b.set(x, y, on(rng));
  return b;
}

cv::Mat to_mat(const BinaryImage& b) {
  cv::Mat m(b.height(), b.width(), CV_8UC1);
  for (int y = 0; y < b.height(); ++y)
    for (int x = 0; x < b.width(); ++x) m.at<std::uint8_t>(y, x) = b.at(x, y) ? 255 : 0;
  return m;
}

BinaryImage from_mat(const cv::Mat& m) {
  BinaryImage b(m.cols, m.rows);
  for (int y = 0; y < m.rows; ++y)
    for (int x = 0; x < m.cols; ++x) b.set(x, y, m.at<std::uint8_t>(y, x) != 0);
  return b;
}

const cv::Mat kSquare = cv::Mat::ones(3, 3, CV_8UC1);

}  // namespace

TEST_SUITE("morphology") {

TEST_CASE("binary image basics") {
  BinaryImage b(10, 6);
  CHECK(b.popcount() == 0);
  b.fill_rect(-3, 2, 4, 100);
  CHECK(b.popcount() == 4 * 4);
  CHECK(b.get_or(-1, 0, true));
  CHECK_FALSE(b.get_or(10, 0, false));
  BinaryImage c(10, 6);
  c.fill_rect(2, 0, 10, 6);
  CHECK((b & c).popcount() == 2 * 4);
  CHECK((b | c).popcount() == 16 + 48 - 8);
  Raster r(5, 4, Rgb{1, 2, 3});
  r.fill_rect(3, 3, 9, 9, Rgb{9, 9, 9});
  CHECK(r.at(4, 3) == Rgb{9, 9, 9});
  CHECK(r.at(2, 3) == Rgb{1, 2, 3});
  CHECK(luma(Rgb{255, 255, 255}) == 255);
  CHECK(luma(Rgb{0, 0, 0}) == 0);
}

TEST_CASE("dilate and erode agree with OpenCV") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const BinaryImage b = random_mask(seed, 37, 23, 0.2 + 0.08 * static_cast<double>(seed));
    cv::Mat d, e;
    cv::dilate(to_mat(b), d, kSquare, {-1, -1}, 1, cv::BORDER_CONSTANT, cv::Scalar(0));
    cv::erode(to_mat(b), e, kSquare);  // default border never erodes
    CHECK(dilate3(b) == from_mat(d));
    CHECK(erode3(b) == from_mat(e));
    CHECK(open3(b) == dilate3(erode3(b)));
    CHECK(close3(b) == erode3(dilate3(b)));
  }
}

TEST_CASE("opening and closing are idempotent") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const BinaryImage b = random_mask(seed, 40, 30, 0.45);
    CHECK(open3(open3(b)) == open3(b));
    CHECK(close3(close3(b)) == close3(b));
  }
}

TEST_CASE("component areas agree with OpenCV") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const BinaryImage b = random_mask(seed, 50, 40, 0.35);
    for (auto [conn, cv_conn] : {std::pair{Connectivity::Four, 4}, std::pair{Connectivity::Eight, 8}}) {
      cv::Mat labels, stats, centroids;
      const int n = cv::connectedComponentsWithStats(to_mat(b), labels, stats, centroids, cv_conn);
      std::vector<std::size_t> want;
      for (int i = 1; i < n; ++i) want.push_back(static_cast<std::size_t>(stats.at<int>(i, cv::CC_STAT_AREA)));
      const Components c = label_components(b, conn);
      std::vector<std::size_t> got = c.areas;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      CHECK(got == want);
      for (int y = 0; y < b.height(); ++y)
        for (int x = 0; x < b.width(); ++x) CHECK((c.label_at(x, y) >= 0) == b.at(x, y));
    }
  }
}

TEST_CASE("diagonal pixels join only under 8-connectivity") {
  BinaryImage b(4, 4);
  b.set(0, 0);
  b.set(1, 1);
  CHECK(label_components(b, Connectivity::Four).areas.size() == 2);
  CHECK(label_components(b, Connectivity::Eight).areas.size() == 1);
}

TEST_CASE("outline and fill") {
  BinaryImage ring(12, 12);
  ring.fill_rect(2, 2, 10, 10);
  BinaryImage hole(12, 12);
  hole.fill_rect(4, 4, 8, 8);
  BinaryImage holed(12, 12);
  for (int y = 0; y < 12; ++y)
    for (int x = 0; x < 12; ++x) holed.set(x, y, ring.at(x, y) && !hole.at(x, y));
  CHECK(fill_enclosed(holed) == ring);
  const BinaryImage outline = inner_outline(ring);
  CHECK(outline.popcount() == 8 * 4 - 4);
  CHECK(fill_enclosed(outline) == ring);
  // A region open to the frame edge has nothing enclosed.
  BinaryImage open_u(12, 12);
  open_u.fill_rect(0, 0, 2, 12);
  CHECK(fill_enclosed(open_u) == open_u);
}

}  // TEST_SUITE
