/*
 * lectureseg - in-memory raster and binary image types
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "lectureseg/image.hpp"

#include <algorithm>
#include <numeric>

#include "lectureseg/errors.hpp"

namespace lectureseg {

Raster::Raster(int width, int height, Rgb fill)
    : width_(width),
      height_(height),
      pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {}

void Raster::fill_rect(int x0, int y0, int x1, int y1, Rgb c) {
  x0 = std::max(x0, 0);
  y0 = std::max(y0, 0);
  x1 = std::min(x1, width_);
  y1 = std::min(y1, height_);
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) at(x, y) = c;
}

BinaryImage::BinaryImage(int width, int height, bool fill)
    : width_(width),
      height_(height),
      bits_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
            fill ? 1 : 0) {}

std::size_t BinaryImage::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

void BinaryImage::fill_rect(int x0, int y0, int x1, int y1, bool v) {
  x0 = std::max(x0, 0);
  y0 = std::max(y0, 0);
  x1 = std::min(x1, width_);
  y1 = std::min(y1, height_);
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) set(x, y, v);
}

namespace {

template <class Op>
BinaryImage combine(const BinaryImage& a, const BinaryImage& b, Op op) {
  if (!a.same_size(b)) throw DimensionMismatch("binary images differ in size");
  BinaryImage out(a.width(), a.height());
  for (int y = 0; y < a.height(); ++y)
    for (int x = 0; x < a.width(); ++x) out.set(x, y, op(a.at(x, y), b.at(x, y)));
  return out;
}

}  // namespace

BinaryImage operator&(const BinaryImage& a, const BinaryImage& b) {
  return combine(a, b, [](bool p, bool q) { return p && q; });
}

BinaryImage operator|(const BinaryImage& a, const BinaryImage& b) {
  return combine(a, b, [](bool p, bool q) { return p || q; });
}

}  // namespace lectureseg
