/*
 * lectureseg - tunable parameters
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#pragma once

#include <filesystem>
#include <string>

namespace lectureseg {

struct ClassifierParams {
  // Pixel classes.
  double green_hue_min = 70.0;  // degrees
  double green_hue_max = 170.0;
  double green_sat_min = 0.15;
  double green_val_min = 0.10;
  double green_val_max = 0.90;
  int white_min = 200;
  int white_spread = 30;
  int gray_min = 140;
  int gray_max = 200;
  int gray_spread = 20;

  // Decision thresholds.
  double t_dark = 40.0;   // mean luminance
  int t_black = 32;       // per-pixel luminance
  double b_cov = 0.90;    // dark share of the border band
  double t_green = 0.50;
  double t_green_relaxed = 0.30;
  double t_green_bottom = 0.05;
  double t_white = 0.60;
  double t_sheet = 0.70;
  double board_lower_border = 0.50;   // green share of the bottom 10% rows
  double board_frame_border = 0.80;   // green share of every 5% edge band
  double theta_line = 0.008;
  double theta_repetition = 0.90;
  int edge_threshold = 24;  // Laplacian binarization for the line measure
};

struct FilterParams {
  int edge_threshold = 24;        // T_edge
  int similarity_distance = 20;   // D_sim, max channel difference
  int similarity_span = 4;        // pixels inspected on each side of an edge
  double blob_max_frac = 0.005;   // A_max as a fraction of frame area
  double board_keep_ratio = 0.80; // keep flooded regions within this share of the largest
};

struct WindowParams {
  double height_frac = 0.10;
  double low_frac = 0.05;
  double high_frac = 0.30;
};

enum class BlurMode { Open, Dilate };

struct MatchParams {
  double alpha = 0.5;  // window count
  double beta = 3.0;   // mean quality
  double gamma = 3.0;  // translation consistency
  double delta = 3.0;  // spatial consistency
  double tau = 3.0;
  double q_min = 0.35;
  double search_radius_frac = 0.35;
  BlurMode blur = BlurMode::Dilate;
};

struct IndexParams {
  int thumbnail_width = 160;
  std::string title;  // defaults to the manifest's stem
};

struct Config {
  ClassifierParams classifier;
  FilterParams filter;
  WindowParams windows;
  MatchParams match;
  IndexParams index;
};

// Line-oriented `key = value`; '#' starts a comment. Unknown keys and
// malformed values raise ConfigError naming the line.
Config parse_config(const std::string& text);
Config load_config(const std::filesystem::path& path);

}  // namespace lectureseg
