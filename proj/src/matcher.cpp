/*
 * lectureseg - multi-scale sub-window matching between derived content frames
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "lectureseg/matcher.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "lectureseg/errors.hpp"
#include "lectureseg/morphology.hpp"

namespace lectureseg {

namespace {

double population_stddev(const std::vector<double>& v) {
  if (v.size() <= 1) return 0.0;
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size()));
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

// Component-wise median translation over windows that pass q_min.
Vec2 pair_translation(const std::vector<WindowMatch>& ms, double q_min) {
  std::vector<double> xs, ys;
  for (const auto& m : ms)
    if (m.quality >= q_min) {
      xs.push_back(m.translation.x);
      ys.push_back(m.translation.y);
    }
  return {median(xs), median(ys)};
}

}  // namespace

const std::array<double, kScaleCount>& scale_sweep() {
  static const std::array<double, kScaleCount> factors = [] {
    std::array<double, kScaleCount> f{};
    const double ratio = 1.7 / 0.6;
    for (std::size_t k = 0; k < kScaleCount; ++k)
      f[k] = 0.6 * std::pow(ratio, static_cast<double>(k) / (kScaleCount - 1));
    f.front() = 0.6;
    f.back() = 1.7;
    return f;
  }();
  return factors;
}

BinaryImage blur_for_match(const BinaryImage& d, BlurMode mode) {
  return mode == BlurMode::Open ? open3(d) : dilate3(d);
}

BinaryImage rescale_about_center(const BinaryImage& b, double zoom) {
  BinaryImage out(b.width(), b.height());
  const double cx = b.width() / 2.0;
  const double cy = b.height() / 2.0;
  for (int y = 0; y < b.height(); ++y) {
    const int sy = static_cast<int>(std::floor((y + 0.5 - cy) / zoom + cy));
    if (sy < 0 || sy >= b.height()) continue;
    for (int x = 0; x < b.width(); ++x) {
      const int sx = static_cast<int>(std::floor((x + 0.5 - cx) / zoom + cx));
      if (sx >= 0 && sx < b.width() && b.at(sx, sy)) out.set(x, y);
    }
  }
  return out;
}

double Vec2::length() const { return std::hypot(x, y); }

WindowTemplate::WindowTemplate(const BinaryImage& source, const InterestWindow& window)
    : window_(window), words_per_row_((window.w + 63) / 64) {
  words_.assign(static_cast<std::size_t>(words_per_row_ * window.h), 0);
  for (int r = 0; r < window.h; ++r)
    for (int c = 0; c < window.w; ++c)
      if (source.get_or(window.x + c, window.y + r, false)) {
        words_[static_cast<std::size_t>(r * words_per_row_ + c / 64)] |= std::uint64_t{1} << (c % 64);
        ++count_;
      }
}

PackedImage::PackedImage(const BinaryImage& b, int margin)
    : width_(b.width()),
      height_(b.height()),
      margin_(std::max(0, margin)),
      stored_width_(b.width() + 2 * margin_),
      stored_height_(b.height() + 2 * margin_) {
  auto stored = [&](int sx, int sy) {
    return b.get_or(sx - margin_, sy - margin_, false) ? 1 : 0;
  };
  // Entry (x, y) holds pixels [x, x+64) of row y, bit i for pixel x+i.
  windows_.assign(static_cast<std::size_t>(stored_width_ * stored_height_), 0);
  for (int sy = 0; sy < stored_height_; ++sy) {
    std::uint64_t v = 0;
    for (int sx = stored_width_ - 1; sx >= 0; --sx) {
      v = (v << 1) | static_cast<std::uint64_t>(stored(sx, sy));
      windows_[static_cast<std::size_t>(sy * stored_width_ + sx)] = v;
    }
  }
  const int stride = stored_width_ + 1;
  integral_.assign(static_cast<std::size_t>(stride * (stored_height_ + 1)), 0);
  for (int sy = 0; sy < stored_height_; ++sy) {
    int row = 0;
    for (int sx = 0; sx < stored_width_; ++sx) {
      row += stored(sx, sy);
      integral_[static_cast<std::size_t>((sy + 1) * stride + sx + 1)] =
          integral_[static_cast<std::size_t>(sy * stride + sx + 1)] + row;
    }
  }
}

long PackedImage::count(int x, int y, int w, int h) const {
  const int x0 = std::clamp(x + margin_, 0, stored_width_);
  const int y0 = std::clamp(y + margin_, 0, stored_height_);
  const int x1 = std::clamp(x + w + margin_, 0, stored_width_);
  const int y1 = std::clamp(y + h + margin_, 0, stored_height_);
  return count_stored(x0, y0, x1, y1);
}

std::uint64_t PackedImage::bits_at(int x, int y) const {
  const int sy = y + margin_;
  if (sy < 0 || sy >= stored_height_) return 0;
  const int sx = x + margin_;
  if (sx < 0) return sx > -64 ? bits_at(-margin_, y) << -sx : 0;
  if (sx >= stored_width_) return 0;
  return windows_[static_cast<std::size_t>(sy * stored_width_ + sx)];
}

namespace {

// Placements within `radius` ordered by the tie-break: translation length,
// then dy, then dx.
const std::vector<std::pair<int, int>>& offsets_by_distance(int radius) {
  thread_local std::map<int, std::vector<std::pair<int, int>>> cache;
  auto [it, fresh] = cache.try_emplace(radius);
  if (fresh) {
    auto& v = it->second;
    for (int dy = -radius; dy <= radius; ++dy)
      for (int dx = -radius; dx <= radius; ++dx) v.emplace_back(dx, dy);
    std::sort(v.begin(), v.end(), [](auto a, auto b) {
      const int da = a.first * a.first + a.second * a.second;
      const int db = b.first * b.first + b.second * b.second;
      if (da != db) return da < db;
      return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
  }
  return it->second;
}

}  // namespace

WindowMatch locate_window(const WindowTemplate& t, const PackedImage& target, int radius) {
  const InterestWindow& w = t.window();
  WindowMatch best;
  best.window = w;
  best.best_x = std::clamp(w.x, 0, std::max(0, target.width() - w.w));
  best.best_y = std::clamp(w.y, 0, std::max(0, target.height() - w.h));

  // Placements may hang over the frame edge by up to the target's margin;
  // pixels out there count as empty.
  const int m = target.margin();
  const int x_lo = std::max(-m, w.x - radius);
  const int x_hi = std::min(target.width() - w.w + m, w.x + radius);
  const int y_lo = std::max(-m, w.y - radius);
  const int y_hi = std::min(target.height() - w.h + m, w.y + radius);

  const int words = t.words_per_row();
  const int h = w.h;
  // remaining[r]: template pixels in rows r.. for early exit.
  std::vector<long> remaining(static_cast<std::size_t>(h) + 1, 0);
  std::vector<std::uint64_t> first_word(static_cast<std::size_t>(h));
  for (int r = h - 1; r >= 0; --r) {
    long c = 0;
    for (int k = 0; k < words; ++k) c += std::popcount(t.word(r, k));
    remaining[static_cast<std::size_t>(r)] = remaining[static_cast<std::size_t>(r) + 1] + c;
    first_word[static_cast<std::size_t>(r)] = t.word(r, 0);
  }
  const long total = remaining[0];
  const int stride = target.stored_width();

  // Offsets are visited in tie-break order, so only a strictly larger
  // overlap replaces the incumbent and a perfect overlap ends the search.
  long best_overlap = -1;
  bool found = false;
  for (const auto& [dx, dy] : offsets_by_distance(radius)) {
    const int x = w.x + dx;
    const int y = w.y + dy;
    if (x < x_lo || x > x_hi || y < y_lo || y > y_hi) continue;
    const int sx = x + m;
    const int sy = y + m;
    if (found && std::min<long>(total, target.count_stored(sx, sy, sx + w.w, sy + h)) <= best_overlap)
      continue;
    long overlap = 0;
    bool pruned = false;
    if (words == 1) {
      const std::uint64_t* bits = target.stored_bits(sx, sy);
      for (int r = 0; r < h; ++r, bits += stride) {
        if (found && overlap + remaining[static_cast<std::size_t>(r)] <= best_overlap) {
          pruned = true;
          break;
        }
        overlap += std::popcount(first_word[static_cast<std::size_t>(r)] & *bits);
      }
    } else {
      for (int r = 0; r < h; ++r) {
        if (found && overlap + remaining[static_cast<std::size_t>(r)] <= best_overlap) {
          pruned = true;
          break;
        }
        for (int k = 0; k < words; ++k)
          overlap += std::popcount(t.word(r, k) & target.bits_at(x + 64 * k, y + r));
      }
    }
    if (pruned) continue;
    if (!found || overlap > best_overlap) {
      found = true;
      best_overlap = overlap;
      best.best_x = x;
      best.best_y = y;
      if (best_overlap == total) break;
    }
  }

  best.matched = best_overlap > 0 ? static_cast<std::size_t>(best_overlap) : 0;
  best.translation = {static_cast<double>(best.best_x - w.x), static_cast<double>(best.best_y - w.y)};
  best.quality = t.count() ? static_cast<double>(best.matched) / static_cast<double>(t.count()) : 0.0;
  return best;
}

WindowMatch locate_window(const BinaryImage& source, const InterestWindow& window,
                          const BinaryImage& target, int radius) {
  return locate_window(WindowTemplate(source, window), PackedImage(target, radius), radius);
}

int search_radius(int width, int height, const MatchParams& p) {
  return static_cast<int>(std::lround(p.search_radius_frac * std::min(width, height)));
}

MatchResult score(const std::vector<WindowMatch>& ms, int window_h, const MatchParams& p) {
  MatchResult res;
  res.matches = ms;
  std::vector<const WindowMatch*> kept;
  for (const auto& m : ms)
    if (m.quality >= p.q_min) kept.push_back(&m);
  res.n = static_cast<int>(kept.size());

  if (!kept.empty()) {
    double q = 0.0;
    std::vector<double> lengths;
    for (const auto* m : kept) {
      q += m->quality;
      lengths.push_back(m->translation.length());
    }
    res.mean_quality = q / static_cast<double>(kept.size());

    std::vector<double> distance_errors;
    for (std::size_t a = 0; a < kept.size(); ++a)
      for (std::size_t b = a + 1; b < kept.size(); ++b) {
        const auto& ma = *kept[a];
        const auto& mb = *kept[b];
        const double d_src = std::hypot(mb.window.x - ma.window.x, mb.window.y - ma.window.y);
        const double d_dst = std::hypot(mb.best_x - ma.best_x, mb.best_y - ma.best_y);
        distance_errors.push_back(d_dst - d_src);
      }
    const double h = window_h > 0 ? window_h : 1;
    res.translation_consistency = -population_stddev(lengths) / h;
    res.spatial_consistency = -population_stddev(distance_errors) / h;
  }
  res.total = p.alpha * res.n + p.beta * res.mean_quality + p.gamma * res.translation_consistency +
              p.delta * res.spatial_consistency;
  res.accepted = res.n >= 2 && res.total >= p.tau;
  res.translation = pair_translation(ms, p.q_min);
  return res;
}

namespace {

// Evaluate templates from `source` against `target` magnified by `zoom`;
// translations of the returned matches are mapped back to `target` pixels.
MatchResult evaluate(const std::vector<WindowTemplate>& templates, const BinaryImage& target,
                     double zoom, int window_h, const Config& cfg) {
  const BinaryImage searched = blur_for_match(rescale_about_center(target, zoom), cfg.match.blur);
  const int radius = search_radius(target.width(), target.height(), cfg.match);
  const PackedImage packed(searched, radius);

  std::vector<WindowMatch> ms;
  ms.reserve(templates.size());
  for (const auto& t : templates) ms.push_back(locate_window(t, packed, radius));
  MatchResult res = score(ms, window_h, cfg.match);

  const double cx = target.width() / 2.0;
  const double cy = target.height() / 2.0;
  for (auto& m : res.matches) {
    const double px = m.best_x + m.window.w / 2.0;
    const double py = m.best_y + m.window.h / 2.0;
    const double ox = cx + (px - cx) / zoom;
    const double oy = cy + (py - cy) / zoom;
    m.translation = {ox - (m.window.x + m.window.w / 2.0), oy - (m.window.y + m.window.h / 2.0)};
  }
  const Vec2 t = pair_translation(res.matches, cfg.match.q_min);
  res.translation = {std::round(t.x), std::round(t.y)};
  return res;
}

std::vector<WindowTemplate> templates_for(const BinaryImage& frame, const Config& cfg) {
  std::vector<WindowTemplate> out;
  for (const auto& w : select_windows(frame, cfg.windows)) out.emplace_back(frame, w);
  return out;
}

}  // namespace

MatchResult match_pair(const BinaryImage& older, MediaType older_media, const BinaryImage& newer,
                       MediaType newer_media, const Config& cfg) {
  if (older_media != newer_media || !is_clusterable(older_media))
    throw MediaTypeMismatch("match_pair needs two board or two sheet frames, got " +
                            std::string(to_string(older_media)) + " and " +
                            std::string(to_string(newer_media)));
  if (!older.same_size(newer)) throw DimensionMismatch("content frames differ in size");

  const auto& sweep = scale_sweep();
  std::array<std::size_t, kScaleCount> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(std::log(sweep[a])) < std::abs(std::log(sweep[b]));
  });

  const int window_h = window_geometry(older.width(), older.height(), cfg.windows).h;
  const auto forward = templates_for(older, cfg);
  std::vector<WindowTemplate> reverse;
  const bool try_reverse = older_media == MediaType::Board;
  if (try_reverse) reverse = templates_for(newer, cfg);

  MatchResult best;
  bool have = false;
  auto consider = [&](MatchResult r, double s, MatchDirection d) {
    r.scale = s;
    r.direction = d;
    // Reverse matches run from the newer frame back to the older one.
    if (d == MatchDirection::Reverse) r.translation = {-r.translation.x, -r.translation.y};
    if (!have || r.total > best.total) {
      best = std::move(r);
      have = true;
    }
  };
  for (std::size_t k : order) {
    const double s = sweep[k];
    // Forward: the newer frame is brought back to the older one's scale.
    consider(evaluate(forward, newer, 1.0 / s, window_h, cfg), s, MatchDirection::Forward);
    if (try_reverse)
      consider(evaluate(reverse, older, s, window_h, cfg), s, MatchDirection::Reverse);
  }
  return best;
}

MatchResult match_pair(const BinaryImage& older, const BinaryImage& newer, MediaType media,
                       const Config& cfg) {
  return match_pair(older, media, newer, media, cfg);
}

}  // namespace lectureseg
