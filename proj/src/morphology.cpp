/*
 * lectureseg - binary morphology and connected components
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "lectureseg/morphology.hpp"

#include <array>
#include <utility>
#include <vector>

namespace lectureseg {

namespace {

// 3x3 square max (or min) as two 1-D passes; `outside` pads the border.
BinaryImage square3(const BinaryImage& b, bool want_any, bool outside) {
  const int w = b.width(), h = b.height();
  const auto src = b.data();
  const std::uint8_t pad = outside ? 1 : 0;
  auto px = [&](int x, int y) -> std::uint8_t {
    return x < 0 || x >= w ? pad : src[static_cast<std::size_t>(y * w + x)];
  };
  std::vector<std::uint8_t> row(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::uint8_t l = px(x - 1, y), c = px(x, y), r = px(x + 1, y);
      row[static_cast<std::size_t>(y * w + x)] = want_any ? (l | c | r) : (l & c & r);
    }
  auto rx = [&](int x, int y) -> std::uint8_t {
    return y < 0 || y >= h ? pad : row[static_cast<std::size_t>(y * w + x)];
  };
  BinaryImage out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::uint8_t u = rx(x, y - 1), c = rx(x, y), d = rx(x, y + 1);
      if (want_any ? (u | c | d) : (u & c & d)) out.set(x, y);
    }
  return out;
}

}  // namespace

BinaryImage dilate3(const BinaryImage& b) { return square3(b, true, false); }

BinaryImage erode3(const BinaryImage& b) { return square3(b, false, true); }

BinaryImage open3(const BinaryImage& b) { return dilate3(erode3(b)); }
BinaryImage close3(const BinaryImage& b) { return erode3(dilate3(b)); }

Components label_components(const BinaryImage& b, Connectivity conn) {
  Components c;
  c.width = b.width();
  c.labels.assign(static_cast<std::size_t>(b.width()) * static_cast<std::size_t>(b.height()), -1);

  static constexpr std::array<std::pair<int, int>, 8> kOffsets = {
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};
  const int n_offsets = conn == Connectivity::Four ? 4 : 8;

  std::vector<std::pair<int, int>> stack;
  auto idx = [&](int x, int y) {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(b.width()) +
           static_cast<std::size_t>(x);
  };
  for (int y = 0; y < b.height(); ++y)
    for (int x = 0; x < b.width(); ++x) {
      if (!b.at(x, y) || c.labels[idx(x, y)] >= 0) continue;
      const int label = static_cast<int>(c.areas.size());
      std::size_t area = 0;
      c.labels[idx(x, y)] = label;
      stack.emplace_back(x, y);
      while (!stack.empty()) {
        auto [px, py] = stack.back();
        stack.pop_back();
        ++area;
        for (int k = 0; k < n_offsets; ++k) {
          const int nx = px + kOffsets[k].first;
          const int ny = py + kOffsets[k].second;
          if (!b.get_or(nx, ny, false) || c.labels[idx(nx, ny)] >= 0) continue;
          c.labels[idx(nx, ny)] = label;
          stack.emplace_back(nx, ny);
        }
      }
      c.areas.push_back(area);
    }
  return c;
}

BinaryImage inner_outline(const BinaryImage& b) {
  BinaryImage out(b.width(), b.height());
  for (int y = 0; y < b.height(); ++y)
    for (int x = 0; x < b.width(); ++x) {
      if (!b.at(x, y)) continue;
      const bool edge = !b.get_or(x - 1, y, false) || !b.get_or(x + 1, y, false) ||
                        !b.get_or(x, y - 1, false) || !b.get_or(x, y + 1, false);
      out.set(x, y, edge);
    }
  return out;
}

BinaryImage fill_enclosed(const BinaryImage& b) {
  const int w = b.width();
  const int h = b.height();
  BinaryImage outside(w, h);
  std::vector<std::pair<int, int>> stack;
  auto seed = [&](int x, int y) {
    if (!b.at(x, y) && !outside.at(x, y)) {
      outside.set(x, y);
      stack.emplace_back(x, y);
    }
  };
  for (int x = 0; x < w; ++x) {
    seed(x, 0);
    seed(x, h - 1);
  }
  for (int y = 0; y < h; ++y) {
    seed(0, y);
    seed(w - 1, y);
  }
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x > 0) seed(x - 1, y);
    if (x + 1 < w) seed(x + 1, y);
    if (y > 0) seed(x, y - 1);
    if (y + 1 < h) seed(x, y + 1);
  }
  BinaryImage out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out.set(x, y, !outside.at(x, y));
  return out;
}

}  // namespace lectureseg
