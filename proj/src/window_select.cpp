/*
 * lectureseg - interest sub-window selection
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "lectureseg/window_select.hpp"

#include <cmath>
#include <optional>

namespace lectureseg {

namespace {

// Summed-area table with one row/column of zero padding.
class IntegralImage {
 public:
  explicit IntegralImage(const BinaryImage& b) : w_(b.width() + 1), sums_(
      static_cast<std::size_t>(b.width() + 1) * static_cast<std::size_t>(b.height() + 1), 0) {
    for (int y = 0; y < b.height(); ++y) {
      std::size_t row = 0;
      for (int x = 0; x < b.width(); ++x) {
        row += b.at(x, y) ? 1 : 0;
        at(x + 1, y + 1) = at(x + 1, y) + row;
      }
    }
  }

  std::size_t sum(int x, int y, int w, int h) const {
    return at(x + w, y + h) + at(x, y) - at(x + w, y) - at(x, y + h);
  }

 private:
  std::size_t& at(int x, int y) { return sums_[static_cast<std::size_t>(y * w_ + x)]; }
  std::size_t at(int x, int y) const { return sums_[static_cast<std::size_t>(y * w_ + x)]; }

  int w_;
  std::vector<std::size_t> sums_;
};

}  // namespace

WindowGeometry window_geometry(int frame_width, int frame_height, const WindowParams& p) {
  (void)frame_width;
  WindowGeometry g;
  g.h = std::max(1, static_cast<int>(std::lround(p.height_frac * frame_height)));
  g.w = 2 * g.h;
  g.step = std::max(1, g.h / 2);
  g.low = p.low_frac * g.w * g.h;
  g.high = p.high_frac * g.w * g.h;
  return g;
}

std::pair<int, int> strip_bounds(int frame_width, Strip s) {
  const int k = static_cast<int>(s);
  return {k * frame_width / 3, (k + 1) * frame_width / 3};
}

std::size_t count_content(const BinaryImage& b, int x, int y, int w, int h) {
  std::size_t n = 0;
  for (int yy = y; yy < y + h; ++yy)
    for (int xx = x; xx < x + w; ++xx)
      if (b.get_or(xx, yy, false)) ++n;
  return n;
}

WindowSet select_windows(const BinaryImage& content, const WindowParams& p) {
  WindowSet out;
  if (content.empty()) return out;
  const WindowGeometry g = window_geometry(content.width(), content.height(), p);
  if (g.h > content.height()) return out;
  const IntegralImage sums(content);

  // Grid rows shared by all strips.
  std::vector<int> ys;
  for (int y = 0; y + g.h <= content.height(); y += g.step) ys.push_back(y);

  for (Strip strip : {Strip::Left, Strip::Middle, Strip::Right}) {
    const auto [x0, x1] = strip_bounds(content.width(), strip);
    std::vector<int> xs;
    for (int x = x0; x + g.w <= x1; x += g.step) xs.push_back(x);
    if (xs.empty()) continue;

    auto accept = [&](int x, int y, Scan scan) -> std::optional<InterestWindow> {
      const std::size_t cc = sums.sum(x, y, g.w, g.h);
      const auto c = static_cast<double>(cc);
      if (c < g.low || c > g.high) return std::nullopt;
      return InterestWindow{x, y, g.w, g.h, cc, strip, scan};
    };

    std::optional<InterestWindow> top;
    for (auto yi = ys.begin(); yi != ys.end() && !top; ++yi)
      for (auto xi = xs.begin(); xi != xs.end() && !top; ++xi) top = accept(*xi, *yi, Scan::TopDown);

    std::optional<InterestWindow> bottom;
    for (auto yi = ys.rbegin(); yi != ys.rend() && !bottom; ++yi)
      for (auto xi = xs.rbegin(); xi != xs.rend() && !bottom; ++xi)
        bottom = accept(*xi, *yi, Scan::BottomUp);

    if (top) out.push_back(*top);
    if (bottom && !(top && top->x == bottom->x && top->y == bottom->y)) out.push_back(*bottom);
  }
  return out;
}

}  // namespace lectureseg
