/*
 * lectureseg - media type classification of key frames
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "lectureseg/media_classifier.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "lectureseg/content_filter.hpp"
#include "lectureseg/pixel_classes.hpp"

namespace lectureseg {

std::string_view to_string(MediaType t) noexcept {
  switch (t) {
    case MediaType::Board: return "board";
    case MediaType::Class: return "class";
    case MediaType::Computer: return "computer";
    case MediaType::Illustration: return "illustration";
    case MediaType::Podium: return "podium";
    case MediaType::Sheet: return "sheet";
    case MediaType::Ppt: return "ppt";
  }
  return "illustration";
}

std::optional<MediaType> parse_media_type(std::string_view s) noexcept {
  for (auto t : {MediaType::Board, MediaType::Class, MediaType::Computer, MediaType::Illustration,
                 MediaType::Podium, MediaType::Sheet, MediaType::Ppt})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

std::string_view to_string(DecisionPath p) noexcept {
  switch (p) {
    case DecisionPath::ExternalLabel: return "external-label";
    case DecisionPath::DarkOrBordered: return "dark-or-bordered";
    case DecisionPath::GreenPodium: return "green-podium";
    case DecisionPath::GreenBoard: return "green-board";
    case DecisionPath::WhiteComputer: return "white-computer";
    case DecisionPath::WhiteSheet: return "white-sheet";
    case DecisionPath::ResidualComputer: return "residual-computer";
    case DecisionPath::ResidualPodium: return "residual-podium";
    case DecisionPath::ResidualBoard: return "residual-board";
    case DecisionPath::ResidualIllustration: return "residual-illustration";
  }
  return "residual-illustration";
}

namespace {

int band_pixels(double frac, int extent) {
  return std::max(1, static_cast<int>(std::lround(frac * extent)));
}

// Dark share of the frame border of the given relative width, best over 5..10%.
std::pair<double, double> best_dark_border(const Raster& r, const ClassifierParams& p) {
  double best = 0.0;
  double best_frac = 0.0;
  for (int pct = 5; pct <= 10; ++pct) {
    const double frac = pct / 100.0;
    const int bw = band_pixels(frac, r.width());
    const int bh = band_pixels(frac, r.height());
    std::size_t total = 0;
    std::size_t dark = 0;
    for (int y = 0; y < r.height(); ++y)
      for (int x = 0; x < r.width(); ++x) {
        if (x >= bw && x < r.width() - bw && y >= bh && y < r.height() - bh) continue;
        ++total;
        if (luma(r.at(x, y)) < p.t_black) ++dark;
      }
    const double share = total ? static_cast<double>(dark) / static_cast<double>(total) : 0.0;
    if (share > best) {
      best = share;
      best_frac = frac;
    }
  }
  return {best, best_frac};
}

struct StepResult {
  MediaType type;
  DecisionPath path;
};

bool board_border_rule(const ColorProfile& c, const ClassifierParams& p) {
  return c.green_bottom10_fraction >= p.board_lower_border ||
         c.green_edge_band_min >= p.board_frame_border;
}

std::string lowercase(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

ColorProfile color_profile(const Raster& r, const ClassifierParams& p) {
  ColorProfile c;
  if (r.empty()) return c;
  const int w = r.width();
  const int h = r.height();
  const int bottom_rows = band_pixels(0.10, h);
  const int edge_rows = band_pixels(0.05, h);
  const int edge_cols = band_pixels(0.05, w);

  std::size_t green = 0, green_bottom = 0, white = 0, gray = 0, skin = 0;
  std::array<std::size_t, 4> band_green{};  // top, bottom, left, right
  double lum_sum = 0.0;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const Rgb px = r.at(x, y);
      lum_sum += luma(px);
      const bool g = is_green(px, p);
      if (g) {
        ++green;
        if (y >= h - bottom_rows) ++green_bottom;
        if (y < edge_rows) ++band_green[0];
        if (y >= h - edge_rows) ++band_green[1];
        if (x < edge_cols) ++band_green[2];
        if (x >= w - edge_cols) ++band_green[3];
      }
      if (is_white(px, p)) ++white;
      else if (is_light_gray(px, p)) ++gray;
      else if (is_skin(px)) ++skin;
    }

  const double n = static_cast<double>(r.size());
  c.green_fraction = static_cast<double>(green) / n;
  c.green_bottom10_fraction = static_cast<double>(green_bottom) / (static_cast<double>(bottom_rows) * w);
  c.white_fraction = static_cast<double>(white) / n;
  c.light_gray_fraction = static_cast<double>(gray) / n;
  c.skin_fraction = static_cast<double>(skin) / n;
  c.mean_luminance = lum_sum / n;
  const double row_band = static_cast<double>(edge_rows) * w;
  const double col_band = static_cast<double>(edge_cols) * h;
  c.green_edge_band_min = std::min({band_green[0] / row_band, band_green[1] / row_band,
                                    band_green[2] / col_band, band_green[3] / col_band});
  std::tie(c.border_dark_fraction, c.border_band_fraction) = best_dark_border(r, p);
  return c;
}

bool is_dark_or_black_bordered(const Raster& r, const ClassifierParams& p) {
  const ColorProfile c = color_profile(r, p);
  return c.mean_luminance < p.t_dark || c.border_dark_fraction >= p.b_cov;
}

double horizontal_line_measure(const Raster& r, const ClassifierParams& p) {
  if (r.empty()) return 0.0;
  const auto resp = laplacian_response(r);
  const int w = r.width();
  const double min_len = w / 16.0;
  double sum = 0.0;
  for (int y = 0; y < r.height(); ++y) {
    int run = 0;
    for (int x = 0; x <= w; ++x) {
      const bool on = x < w && resp[static_cast<std::size_t>(y * w + x)] >= p.edge_threshold;
      if (on) {
        ++run;
        continue;
      }
      if (run > 0 && run >= min_len) sum += std::exp2(8.0 * run / w);
      run = 0;
    }
  }
  return sum / (static_cast<double>(w) * r.height());
}

double color_repetition_measure(const Raster& r) {
  if (r.empty()) return 0.0;
  auto bin = [](Rgb c) { return ((c.r >> 6) << 4) | ((c.g >> 6) << 2) | (c.b >> 6); };

  auto line_fraction = [&](int lines, int length, auto pixel) {
    if (lines < 2) return 1.0;
    std::array<int, 64> prev{}, cur{};
    for (int i = 0; i < length; ++i) ++prev[static_cast<std::size_t>(bin(pixel(0, i)))];
    int similar = 0;
    for (int l = 1; l < lines; ++l) {
      cur.fill(0);
      for (int i = 0; i < length; ++i) ++cur[static_cast<std::size_t>(bin(pixel(l, i)))];
      int inter = 0;
      for (std::size_t b = 0; b < 64; ++b) inter += std::min(prev[b], cur[b]);
      if (static_cast<double>(inter) >= 0.9 * length) ++similar;
      prev = cur;
    }
    return static_cast<double>(similar) / (lines - 1);
  };

  const double rows = line_fraction(r.height(), r.width(), [&](int l, int i) { return r.at(i, l); });
  const double cols = line_fraction(r.width(), r.height(), [&](int l, int i) { return r.at(l, i); });
  return std::max(rows, cols);
}

Classification classify_traced(const Raster& r, const std::optional<std::string>& external_label,
                               const ClassifierParams& p) {
  Classification out;
  auto finish = [&](MediaType t, DecisionPath path, int step) {
    out.type = t;
    out.path = path;
    out.steps_evaluated = step;
    return out;
  };

  // Step 0: externally labeled frames are taken as given.
  if (external_label) {
    const std::string label = lowercase(*external_label);
    if (label == "ppt") return finish(MediaType::Ppt, DecisionPath::ExternalLabel, 0);
    if (label == "class") return finish(MediaType::Class, DecisionPath::ExternalLabel, 0);
  }

  out.color = color_profile(r, p);
  const ColorProfile& c = out.color;

  // Step 1
  if (c.mean_luminance < p.t_dark || c.border_dark_fraction >= p.b_cov)
    return finish(MediaType::Computer, DecisionPath::DarkOrBordered, 1);

  auto structure = [&]() -> const StructureProfile& {
    if (!out.structure_computed) {
      out.structure.horizontal_line_measure = horizontal_line_measure(r, p);
      out.structure.color_repetition_measure = color_repetition_measure(r);
      out.structure_computed = true;
    }
    return out.structure;
  };

  // Step 2: predominantly green.
  if (c.green_fraction >= p.t_green) {
    if (c.green_bottom10_fraction < p.t_green_bottom)
      return finish(MediaType::Podium, DecisionPath::GreenPodium, 2);
    if (board_border_rule(c, p)) return finish(MediaType::Board, DecisionPath::GreenBoard, 2);
  } else if (c.white_fraction >= p.t_white) {
    // Step 3: predominantly white.
    if (structure().horizontal_line_measure >= p.theta_line)
      return finish(MediaType::Computer, DecisionPath::WhiteComputer, 3);
    if (c.white_fraction + c.light_gray_fraction + c.skin_fraction >= p.t_sheet)
      return finish(MediaType::Sheet, DecisionPath::WhiteSheet, 3);
  }

  // Step 4: residual frames.
  const StructureProfile& s = structure();
  if (s.horizontal_line_measure >= p.theta_line || s.color_repetition_measure >= p.theta_repetition)
    return finish(MediaType::Computer, DecisionPath::ResidualComputer, 4);
  if (c.green_fraction >= p.t_green_relaxed) {
    if (c.green_bottom10_fraction < p.t_green_bottom)
      return finish(MediaType::Podium, DecisionPath::ResidualPodium, 4);
    if (board_border_rule(c, p)) return finish(MediaType::Board, DecisionPath::ResidualBoard, 4);
  }
  return finish(MediaType::Illustration, DecisionPath::ResidualIllustration, 4);
}

}  // namespace lectureseg
