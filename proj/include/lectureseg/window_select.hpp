/*
 * lectureseg - interest sub-window selection
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "lectureseg/config.hpp"
#include "lectureseg/image.hpp"

namespace lectureseg {

enum class Strip { Left = 0, Middle = 1, Right = 2 };
enum class Scan { TopDown, BottomUp };

struct InterestWindow {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
  std::size_t cc = 0;  // content pixels inside the window
  Strip strip = Strip::Left;
  Scan scan = Scan::TopDown;
};

using WindowSet = std::vector<InterestWindow>;

struct WindowGeometry {
  int h = 0;
  int w = 0;
  int step = 0;
  double low = 0.0;
  double high = 0.0;
};

WindowGeometry window_geometry(int frame_width, int frame_height, const WindowParams& p = {});

// Horizontal pixel range [x0, x1) of a strip.
std::pair<int, int> strip_bounds(int frame_width, Strip s);

// Up to two windows per strip (first acceptable placement scanning top-down,
// then bottom-up; identical reports collapse). Order: left, middle, right,
// top-down before bottom-up.
WindowSet select_windows(const BinaryImage& content, const WindowParams& p = {});

// Set pixels inside [x, x+w) x [y, y+h).
std::size_t count_content(const BinaryImage& b, int x, int y, int w, int h);

}  // namespace lectureseg
