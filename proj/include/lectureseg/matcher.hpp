/*
 * lectureseg - multi-scale sub-window matching between derived content frames
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lectureseg/config.hpp"
#include "lectureseg/image.hpp"
#include "lectureseg/media_classifier.hpp"
#include "lectureseg/window_select.hpp"

namespace lectureseg {

// 14 zoom factors, geometric from 0.6 to 1.7 inclusive. A factor s states
// that the newer frame shows the older one's content magnified by s.
inline constexpr std::size_t kScaleCount = 14;
const std::array<double, kScaleCount>& scale_sweep();

BinaryImage blur_for_match(const BinaryImage& d, BlurMode mode = BlurMode::Open);

// Nearest-neighbour magnification by `zoom` about the image centre; the
// output keeps the input size and uncovered pixels are false.
BinaryImage rescale_about_center(const BinaryImage& b, double zoom);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  double length() const;
};

struct WindowMatch {
  InterestWindow window;  // in the frame the template came from
  int best_x = 0;         // top-left of the best placement in the searched frame
  int best_y = 0;
  Vec2 translation;
  std::size_t matched = 0;  // template pixels covered at the best placement
  double quality = 0.0;     // matched / window.cc
};

// Template bits cut from a content frame, packed 64 per word.
class WindowTemplate {
 public:
  WindowTemplate(const BinaryImage& source, const InterestWindow& window);

  const InterestWindow& window() const noexcept { return window_; }
  std::size_t count() const noexcept { return count_; }
  int words_per_row() const noexcept { return words_per_row_; }
  std::uint64_t word(int row, int k) const {
    return words_[static_cast<std::size_t>(row * words_per_row_ + k)];
  }

 private:
  InterestWindow window_;
  int words_per_row_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-packed search image, surrounded by `margin` empty pixels on every side.
class PackedImage {
 public:
  explicit PackedImage(const BinaryImage& b, int margin = 0);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int margin() const noexcept { return margin_; }
  // Bits [x, x+64) of row y. Pixels off the image read as zero; x >= -margin.
  std::uint64_t bits_at(int x, int y) const;
  // Set pixels in the w x h rectangle at (x, y), clipped to the image.
  long count(int x, int y, int w, int h) const;

  // Unchecked access in stored coordinates, where (margin, margin) is the
  // image's top-left pixel. Rows are stored_width() entries apart.
  int stored_width() const noexcept { return stored_width_; }
  const std::uint64_t* stored_bits(int sx, int sy) const {
    return &windows_[static_cast<std::size_t>(sy * stored_width_ + sx)];
  }
  long count_stored(int x0, int y0, int x1, int y1) const {
    const int stride = stored_width_ + 1;
    auto at = [&](int x, int y) { return static_cast<long>(integral_[static_cast<std::size_t>(y * stride + x)]); };
    return at(x1, y1) - at(x0, y1) - at(x1, y0) + at(x0, y0);
  }

 private:
  int width_ = 0;
  int height_ = 0;
  int margin_ = 0;
  int stored_width_ = 0;
  int stored_height_ = 0;
  std::vector<std::uint64_t> windows_;
  std::vector<int> integral_;
};

// Exhaustive overlap search within `radius` of the template's own position.
// Ties prefer the shortest translation, then the smallest y, then x.
WindowMatch locate_window(const WindowTemplate& t, const PackedImage& target, int radius);
WindowMatch locate_window(const BinaryImage& source, const InterestWindow& window,
                          const BinaryImage& target, int radius);

int search_radius(int width, int height, const MatchParams& p = {});

enum class MatchDirection { Forward, Reverse };

struct MatchResult {
  int n = 0;
  double mean_quality = 0.0;
  double translation_consistency = 0.0;
  double spatial_consistency = 0.0;
  double scale = 1.0;
  // Component-wise median over counted windows. match_pair reports it as the
  // displacement of the older frame's content in the newer one, in either direction.
  Vec2 translation;
  MatchDirection direction = MatchDirection::Forward;
  double total = 0.0;
  bool accepted = false;
  std::vector<WindowMatch> matches;
};

// Scores one (pair, scale, direction) evaluation. Windows below q_min are
// not counted; deviations are population std-devs divided by window_h.
MatchResult score(const std::vector<WindowMatch>& ms, int window_h, const MatchParams& p = {});

// Decides whether `newer` elaborates `older`. Board pairs are also tried in
// the reverse direction. Returns the best evaluation over the sweep; reported
// translations are in the searched frame's own pixel coordinates.
MatchResult match_pair(const BinaryImage& older, const BinaryImage& newer, MediaType media,
                       const Config& cfg = {});

// Same, with explicit media types for both frames; throws MediaTypeMismatch
// unless both are Board or both are Sheet.
MatchResult match_pair(const BinaryImage& older, MediaType older_media, const BinaryImage& newer,
                       MediaType newer_media, const Config& cfg = {});

}  // namespace lectureseg
