/*
 * lectureseg - extraction of writing pixels from board and sheet frames
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "lectureseg/content_filter.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "lectureseg/errors.hpp"
#include "lectureseg/morphology.hpp"
#include "lectureseg/pixel_classes.hpp"

namespace lectureseg {

namespace {

int channel_distance(Rgb a, Rgb b) {
  return std::max({std::abs(a.r - b.r), std::abs(a.g - b.g), std::abs(a.b - b.b)});
}

// An S x 3 band starting next to (x,y) in direction (dx,dy), all within
// `dist` of the pixel adjacent to (x,y). Bands leaving the image fail.
bool homogeneous_band(const Raster& r, int x, int y, int dx, int dy, int span, int dist,
                      Rgb& reference) {
  const int px = dy;  // perpendicular
  const int py = dx;
  const int ax = x + dx;
  const int ay = y + dy;
  if (ax < 0 || ay < 0 || ax >= r.width() || ay >= r.height()) return false;
  reference = r.at(ax, ay);
  for (int s = 1; s <= span; ++s)
    for (int t = -1; t <= 1; ++t) {
      const int qx = x + s * dx + t * px;
      const int qy = y + s * dy + t * py;
      if (qx < 0 || qy < 0 || qx >= r.width() || qy >= r.height()) return false;
      if (channel_distance(r.at(qx, qy), reference) > dist) return false;
    }
  return true;
}

BinaryImage keep_largest_regions(const BinaryImage& candidates, double keep_ratio) {
  const Components comps = label_components(candidates, Connectivity::Four);
  BinaryImage out(candidates.width(), candidates.height());
  if (comps.areas.empty()) return out;
  const std::size_t largest = *std::max_element(comps.areas.begin(), comps.areas.end());
  std::vector<bool> keep(comps.areas.size());
  for (std::size_t i = 0; i < comps.areas.size(); ++i)
    keep[i] = static_cast<double>(comps.areas[i]) >= keep_ratio * static_cast<double>(largest);
  for (int y = 0; y < out.height(); ++y)
    for (int x = 0; x < out.width(); ++x) {
      const int l = comps.label_at(x, y);
      if (l >= 0 && keep[static_cast<std::size_t>(l)]) out.set(x, y);
    }
  return out;
}

struct BackgroundStages {
  BinaryImage seeds;     // b
  BinaryImage flooded;   // c
  BinaryImage outline;   // d
  BinaryImage filled;    // e
};

BackgroundStages flood_background(const Raster& r, const BinaryImage& edges,
                                  const std::function<bool(Rgb)>& is_background,
                                  double keep_ratio) {
  if (edges.width() != r.width() || edges.height() != r.height())
    throw DimensionMismatch("edge image does not match raster");
  BackgroundStages s;
  s.seeds = BinaryImage(r.width(), r.height());
  BinaryImage floodable(r.width(), r.height());
  for (int y = 0; y < r.height(); ++y)
    for (int x = 0; x < r.width(); ++x) {
      const bool bg = is_background(r.at(x, y));
      s.seeds.set(x, y, bg);
      floodable.set(x, y, bg && !edges.at(x, y));
    }
  s.flooded = keep_largest_regions(floodable, keep_ratio);
  s.outline = inner_outline(s.flooded);
  s.filled = fill_enclosed(s.outline);
  return s;
}

}  // namespace

std::vector<int> laplacian_response(const Raster& r) {
  const int w = r.width();
  const int h = r.height();
  std::vector<int> lum(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) lum[static_cast<std::size_t>(y * w + x)] = luma(r.at(x, y));
  auto at = [&](int x, int y) {
    x = std::clamp(x, 0, w - 1);
    y = std::clamp(y, 0, h - 1);
    return lum[static_cast<std::size_t>(y * w + x)];
  };
  std::vector<int> out(lum.size());
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      out[static_cast<std::size_t>(y * w + x)] =
          4 * at(x, y) - at(x - 1, y) - at(x + 1, y) - at(x, y - 1) - at(x, y + 1);
  return out;
}

namespace {

template <class Pred>
BinaryImage binarize_interior(const Raster& r, Pred keep) {
  const auto resp = laplacian_response(r);
  BinaryImage out(r.width(), r.height());
  for (int y = 1; y + 1 < r.height(); ++y)
    for (int x = 1; x + 1 < r.width(); ++x)
      out.set(x, y, keep(resp[static_cast<std::size_t>(y * r.width() + x)]));
  return out;
}

}  // namespace

BinaryImage laplacian_edge(const Raster& r, int threshold) {
  return binarize_interior(r, [=](int v) { return std::abs(v) >= threshold; });
}

BinaryImage writing_edge(const Raster& r, int threshold, InkPolarity polarity) {
  if (polarity == InkPolarity::Bright)
    return binarize_interior(r, [=](int v) { return v >= threshold; });
  return binarize_interior(r, [=](int v) { return -v >= threshold; });
}

BinaryImage color_similarity_suppress(const BinaryImage& edges, const Raster& r,
                                      const FilterParams& params) {
  if (edges.width() != r.width() || edges.height() != r.height())
    throw DimensionMismatch("edge image does not match raster");
  BinaryImage out = edges;
  const int span = params.similarity_span;
  const int dist = params.similarity_distance;
  for (int y = 0; y < r.height(); ++y)
    for (int x = 0; x < r.width(); ++x) {
      if (!edges.at(x, y)) continue;
      for (auto [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}}) {
        Rgb before, after;
        if (homogeneous_band(r, x, y, -dx, -dy, span, dist, before) &&
            homogeneous_band(r, x, y, dx, dy, span, dist, after) &&
            channel_distance(before, after) > dist) {
          out.set(x, y, false);
          break;
        }
      }
    }
  return out;
}

BinaryImage flood_board(const Raster& r, const BinaryImage& edges,
                        const ClassifierParams& colors, const FilterParams& params) {
  auto s = flood_background(
      r, edges, [&](Rgb p) { return is_green(p, colors); }, params.board_keep_ratio);
  if (s.flooded.popcount() == 0) throw NoBoardFound("no green board region");
  return s.filled;
}

BinaryImage flood_sheet(const Raster& r, const BinaryImage& edges,
                        const ClassifierParams& colors, const FilterParams& params) {
  auto s = flood_background(
      r, edges, [&](Rgb p) { return is_white(p, colors) || is_light_gray(p, colors); },
      params.board_keep_ratio);
  if (s.flooded.popcount() == 0) throw NoSheetFound("no white sheet region");
  return s.filled;
}

BinaryImage morph_denoise(const BinaryImage& b) {
  BinaryImage out(b.width(), b.height());
  for (int y = 0; y < b.height(); ++y)
    for (int x = 0; x < b.width(); ++x) {
      int n = 0;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
          if ((dx || dy) && b.get_or(x + dx, y + dy, false)) ++n;
      out.set(x, y, n >= 3 || (b.at(x, y) && n >= 2));
    }
  return out;
}

BinaryImage morph_restore(const BinaryImage& b) { return close3(b); }

BinaryImage remove_large_blobs(const BinaryImage& b, double max_area) {
  const Components comps = label_components(b, Connectivity::Eight);
  BinaryImage out(b.width(), b.height());
  for (int y = 0; y < b.height(); ++y)
    for (int x = 0; x < b.width(); ++x) {
      const int l = comps.label_at(x, y);
      if (l >= 0 && static_cast<double>(comps.areas[static_cast<std::size_t>(l)]) <= max_area)
        out.set(x, y);
    }
  return out;
}

std::vector<char> FilterTrace::keys() const {
  std::vector<char> k;
  if (!original.empty()) k.push_back('a');
  for (const auto& [key, _] : stages) k.push_back(key);
  return k;
}

ContentExtraction extract_board_content(const Raster& r, const Config& cfg,
                                        bool capture_trace) {
  const FilterParams& fp = cfg.filter;
  const auto barrier = laplacian_edge(r, fp.edge_threshold);
  auto bg = flood_background(
      r, barrier, [&](Rgb p) { return is_green(p, cfg.classifier); }, fp.board_keep_ratio);
  if (bg.flooded.popcount() == 0) throw NoBoardFound("no green board region");

  auto f = writing_edge(r, fp.edge_threshold, InkPolarity::Bright);
  auto g = color_similarity_suppress(f, r, fp);
  auto h = morph_denoise(g);
  auto i = morph_restore(h);
  auto j = bg.filled & i;
  const double max_area = fp.blob_max_frac * r.width() * r.height();
  auto k = remove_large_blobs(j, max_area);

  ContentExtraction out{k, {}};
  if (capture_trace) {
    out.trace.original = r;
    out.trace.stages = {{'b', std::move(bg.seeds)}, {'c', std::move(bg.flooded)},
                        {'d', std::move(bg.outline)}, {'e', std::move(bg.filled)},
                        {'f', std::move(f)}, {'g', std::move(g)}, {'h', std::move(h)},
                        {'i', std::move(i)}, {'j', std::move(j)}, {'k', std::move(k)}};
  }
  return out;
}

ContentExtraction extract_sheet_content(const Raster& r, const Config& cfg,
                                        bool capture_trace) {
  const FilterParams& fp = cfg.filter;
  const auto barrier = laplacian_edge(r, fp.edge_threshold);
  auto bg = flood_background(
      r, barrier,
      [&](Rgb p) { return is_white(p, cfg.classifier) || is_light_gray(p, cfg.classifier); },
      fp.board_keep_ratio);
  if (bg.flooded.popcount() == 0) throw NoSheetFound("no white sheet region");

  auto f = writing_edge(r, fp.edge_threshold, InkPolarity::Dark);
  auto j = bg.filled & f;
  const double max_area = fp.blob_max_frac * r.width() * r.height();
  auto k = remove_large_blobs(j, max_area);

  ContentExtraction out{k, {}};
  if (capture_trace) {
    out.trace.original = r;
    out.trace.stages = {{'b', std::move(bg.seeds)}, {'c', std::move(bg.flooded)},
                        {'d', std::move(bg.outline)}, {'e', std::move(bg.filled)},
                        {'f', std::move(f)}, {'j', std::move(j)}, {'k', std::move(k)}};
  }
  return out;
}

}  // namespace lectureseg
