/*
 * lectureseg - binary morphology and connected components
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "lectureseg/image.hpp"

namespace lectureseg {

// 3x3 square structuring element. Dilation treats out-of-image pixels as
// false, erosion ignores them, so closing is extensive and opening is
// anti-extensive even at the image border.
BinaryImage dilate3(const BinaryImage& b);
BinaryImage erode3(const BinaryImage& b);
BinaryImage open3(const BinaryImage& b);
BinaryImage close3(const BinaryImage& b);

enum class Connectivity { Four = 4, Eight = 8 };

struct Components {
  // Label per pixel, -1 for background; labels are numbered in raster-scan
  // order of each component's first pixel.
  std::vector<int> labels;
  std::vector<std::size_t> areas;
  int width = 0;

  int label_at(int x, int y) const {
    return labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
};

Components label_components(const BinaryImage& b, Connectivity conn);

// Pixels of `b` with a 4-neighbour outside `b` or lying on the image edge.
BinaryImage inner_outline(const BinaryImage& b);

// Everything not 4-reachable from the image edge through false pixels.
BinaryImage fill_enclosed(const BinaryImage& b);

}  // namespace lectureseg
