/*
 * lectureseg - in-memory raster and binary image types
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lectureseg {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Integer Rec.601 luma, rounded.
constexpr int luma(Rgb p) noexcept {
  return (299 * p.r + 587 * p.g + 114 * p.b + 500) / 1000;
}

// Row-major 8-bit RGB image. Any positive size is representable; the 64x48
// lower bound for real key frames is enforced at load time.
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, Rgb fill = {});

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return pixels_.empty(); }
  std::size_t size() const noexcept { return pixels_.size(); }

  const Rgb& at(int x, int y) const { return pixels_[index(x, y)]; }
  Rgb& at(int x, int y) { return pixels_[index(x, y)]; }

  std::span<const Rgb> pixels() const noexcept { return pixels_; }
  std::span<Rgb> pixels() noexcept { return pixels_; }

  // Paint [x0,x1) x [y0,y1), clipped to the image.
  void fill_rect(int x0, int y0, int x1, int y1, Rgb c);

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<Rgb> pixels_;
};

// Row-major boolean plane.
class BinaryImage {
 public:
  BinaryImage() = default;
  BinaryImage(int width, int height, bool fill = false);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return bits_.empty(); }

  bool at(int x, int y) const { return bits_[index(x, y)] != 0; }
  void set(int x, int y, bool v = true) { bits_[index(x, y)] = v ? 1 : 0; }

  // Out-of-range coordinates read as `outside`.
  bool get_or(int x, int y, bool outside) const {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return outside;
    return at(x, y);
  }

  std::size_t popcount() const noexcept;
  bool same_size(const BinaryImage& o) const noexcept {
    return width_ == o.width_ && height_ == o.height_;
  }

  std::span<const std::uint8_t> data() const noexcept { return bits_; }

  void fill_rect(int x0, int y0, int x1, int y1, bool v = true);

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

BinaryImage operator&(const BinaryImage& a, const BinaryImage& b);
BinaryImage operator|(const BinaryImage& a, const BinaryImage& b);

}  // namespace lectureseg
