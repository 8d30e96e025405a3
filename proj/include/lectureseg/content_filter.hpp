/*
 * lectureseg - extraction of writing pixels from board and sheet frames
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 *
 * Board chain, by stage id:
 *   a original   b green mask   c flooded board   d outline   e refilled board
 *   f edges   g similarity suppression   h denoise   i restore
 *   j AND of e and i   k large blob removal
 * The sheet chain uses a white/light-gray background and skips g, h and i.
 */
#pragma once

#include <map>
#include <vector>

#include "lectureseg/config.hpp"
#include "lectureseg/image.hpp"

namespace lectureseg {

using DerivedContentFrame = BinaryImage;

// Signed 4-neighbour Laplacian of luminance, 4*c - sum(neighbours). Positive
// on the bright side of a transition. Out-of-image neighbours replicate the
// nearest edge pixel.
std::vector<int> laplacian_response(const Raster& r);

// |response| >= threshold; pixels without a full 3x3 neighbourhood are false.
BinaryImage laplacian_edge(const Raster& r, int threshold);

enum class InkPolarity { Bright, Dark };

// One-sided Laplacian binarization: Bright keeps response >= threshold (chalk
// on a dark board), Dark keeps -response >= threshold (ink on paper).
BinaryImage writing_edge(const Raster& r, int threshold, InkPolarity polarity);

// Clears edge pixels that sit between two homogeneous, mutually distinct
// regions along a row or a column.
BinaryImage color_similarity_suppress(const BinaryImage& edges, const Raster& r,
                                      const FilterParams& params);

// Board mask: flood of green pixels bounded by `edges`, largest region(s),
// then outlined and refilled so that writing holes are included.
BinaryImage flood_board(const Raster& r, const BinaryImage& edges,
                        const ClassifierParams& colors, const FilterParams& params);

// Same construction with white or light-gray pixels as the background.
BinaryImage flood_sheet(const Raster& r, const BinaryImage& edges,
                        const ClassifierParams& colors, const FilterParams& params);

// Pixel is set iff >= 3 of its 8 neighbours are set, or it is set and >= 2 are.
BinaryImage morph_denoise(const BinaryImage& b);

// 3x3 closing.
BinaryImage morph_restore(const BinaryImage& b);

// Drops 8-connected components whose area exceeds max_area.
BinaryImage remove_large_blobs(const BinaryImage& b, double max_area);

struct FilterTrace {
  Raster original;                        // stage a
  std::map<char, BinaryImage> stages;     // stages b..k that ran

  std::vector<char> keys() const;
};

struct ContentExtraction {
  DerivedContentFrame content;
  FilterTrace trace;  // empty unless capture was requested
};

ContentExtraction extract_board_content(const Raster& r, const Config& cfg,
                                        bool capture_trace = false);
ContentExtraction extract_sheet_content(const Raster& r, const Config& cfg,
                                        bool capture_trace = false);

}  // namespace lectureseg
