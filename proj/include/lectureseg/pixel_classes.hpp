/*
 * lectureseg - per-pixel color predicates shared by classifier and filters
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#pragma once

#include <algorithm>

#include "lectureseg/config.hpp"
#include "lectureseg/image.hpp"

namespace lectureseg {

struct Hsv {
  double hue = 0.0;  // degrees, [0,360)
  double sat = 0.0;  // [0,1]
  double val = 0.0;  // [0,1]
};

inline Hsv to_hsv(Rgb p) noexcept {
  const int mx = std::max({p.r, p.g, p.b});
  const int mn = std::min({p.r, p.g, p.b});
  const double d = mx - mn;
  Hsv out;
  out.val = mx / 255.0;
  out.sat = mx == 0 ? 0.0 : d / mx;
  if (d == 0) return out;
  double h;
  if (mx == p.r) h = 60.0 * ((p.g - p.b) / d);
  else if (mx == p.g) h = 60.0 * ((p.b - p.r) / d + 2.0);
  else h = 60.0 * ((p.r - p.g) / d + 4.0);
  if (h < 0) h += 360.0;
  out.hue = h;
  return out;
}

inline int channel_spread(Rgb p) noexcept {
  return std::max({p.r, p.g, p.b}) - std::min({p.r, p.g, p.b});
}

inline bool is_green(Rgb p, const ClassifierParams& c) noexcept {
  const Hsv h = to_hsv(p);
  return h.hue >= c.green_hue_min && h.hue <= c.green_hue_max && h.sat >= c.green_sat_min &&
         h.val >= c.green_val_min && h.val <= c.green_val_max;
}

inline bool is_white(Rgb p, const ClassifierParams& c) noexcept {
  return std::min({p.r, p.g, p.b}) >= c.white_min && channel_spread(p) <= c.white_spread;
}

inline bool is_light_gray(Rgb p, const ClassifierParams& c) noexcept {
  return std::min({p.r, p.g, p.b}) >= c.gray_min && std::max({p.r, p.g, p.b}) <= c.gray_max &&
         channel_spread(p) <= c.gray_spread;
}

inline bool is_skin(Rgb p) noexcept {
  return p.r > 95 && p.g > 40 && p.b > 20 && p.r > p.g && p.g > p.b && (p.r - p.b) > 15;
}

}  // namespace lectureseg
