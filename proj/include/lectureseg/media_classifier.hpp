/*
 * lectureseg - media type classification of key frames
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lectureseg/config.hpp"
#include "lectureseg/image.hpp"

namespace lectureseg {

enum class MediaType { Board, Class, Computer, Illustration, Podium, Sheet, Ppt };

std::string_view to_string(MediaType t) noexcept;
std::optional<MediaType> parse_media_type(std::string_view s) noexcept;

inline bool is_clusterable(MediaType t) noexcept {
  return t == MediaType::Board || t == MediaType::Sheet;
}

struct ColorProfile {
  double green_fraction = 0.0;
  double green_bottom10_fraction = 0.0;
  double white_fraction = 0.0;
  double light_gray_fraction = 0.0;
  double skin_fraction = 0.0;
  double mean_luminance = 0.0;
  // Best dark share over border bands of 5%..10%, and the band that gave it.
  double border_dark_fraction = 0.0;
  double border_band_fraction = 0.0;
  // Green share of the 5% band along each edge (top, bottom, left, right).
  double green_edge_band_min = 0.0;
};

struct StructureProfile {
  double horizontal_line_measure = 0.0;
  double color_repetition_measure = 0.0;
};

ColorProfile color_profile(const Raster& r, const ClassifierParams& p = {});

bool is_dark_or_black_bordered(const Raster& r, const ClassifierParams& p = {});

// Sum over maximal horizontal runs of bright-side Laplacian edge pixels with
// length l >= W/16 of 2^(8l/W), divided by W*H.
double horizontal_line_measure(const Raster& r, const ClassifierParams& p = {});

// Max over {rows, columns} of the share of adjacent line pairs whose 64-bin
// color histograms intersect by at least 0.9.
double color_repetition_measure(const Raster& r);

// Which leaf of the decision tree produced the type.
enum class DecisionPath {
  ExternalLabel,
  DarkOrBordered,
  GreenPodium,
  GreenBoard,
  WhiteComputer,
  WhiteSheet,
  ResidualComputer,
  ResidualPodium,
  ResidualBoard,
  ResidualIllustration,
};

std::string_view to_string(DecisionPath p) noexcept;

struct Classification {
  MediaType type = MediaType::Illustration;
  DecisionPath path = DecisionPath::ResidualIllustration;
  // Tree steps evaluated (0 = label, 1 = dark, 2 = green, 3 = white, 4 = residual).
  int steps_evaluated = 0;
  bool structure_computed = false;
  ColorProfile color;
  StructureProfile structure;
};

Classification classify_traced(const Raster& r, const std::optional<std::string>& external_label,
                               const ClassifierParams& p = {});

inline MediaType classify(const Raster& r, const std::optional<std::string>& external_label,
                          const ClassifierParams& p = {}) {
  return classify_traced(r, external_label, p).type;
}

}  // namespace lectureseg
