/*
 * lectureseg - tunable parameters
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "lectureseg/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "lectureseg/errors.hpp"

namespace lectureseg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
bool parse_number(const std::string& s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

using Setter = std::function<bool(Config&, const std::string&)>;

template <class T, class Section>
Setter field(Section Config::*section, T Section::*member) {
  return [=](Config& c, const std::string& v) { return parse_number(v, c.*section.*member); };
}

const std::map<std::string, Setter>& setters() {
  using C = ClassifierParams;
  using F = FilterParams;
  using W = WindowParams;
  using M = MatchParams;
  static const std::map<std::string, Setter> table = {
      {"classifier.green_hue_min", field(&Config::classifier, &C::green_hue_min)},
      {"classifier.green_hue_max", field(&Config::classifier, &C::green_hue_max)},
      {"classifier.green_sat_min", field(&Config::classifier, &C::green_sat_min)},
      {"classifier.green_val_min", field(&Config::classifier, &C::green_val_min)},
      {"classifier.green_val_max", field(&Config::classifier, &C::green_val_max)},
      {"classifier.white_min", field(&Config::classifier, &C::white_min)},
      {"classifier.white_spread", field(&Config::classifier, &C::white_spread)},
      {"classifier.gray_min", field(&Config::classifier, &C::gray_min)},
      {"classifier.gray_max", field(&Config::classifier, &C::gray_max)},
      {"classifier.gray_spread", field(&Config::classifier, &C::gray_spread)},
      {"classifier.t_dark", field(&Config::classifier, &C::t_dark)},
      {"classifier.t_black", field(&Config::classifier, &C::t_black)},
      {"classifier.b_cov", field(&Config::classifier, &C::b_cov)},
      {"classifier.t_green", field(&Config::classifier, &C::t_green)},
      {"classifier.t_green_relaxed", field(&Config::classifier, &C::t_green_relaxed)},
      {"classifier.t_green_bottom", field(&Config::classifier, &C::t_green_bottom)},
      {"classifier.t_white", field(&Config::classifier, &C::t_white)},
      {"classifier.t_sheet", field(&Config::classifier, &C::t_sheet)},
      {"classifier.board_lower_border", field(&Config::classifier, &C::board_lower_border)},
      {"classifier.board_frame_border", field(&Config::classifier, &C::board_frame_border)},
      {"classifier.theta_line", field(&Config::classifier, &C::theta_line)},
      {"classifier.theta_repetition", field(&Config::classifier, &C::theta_repetition)},
      {"classifier.edge_threshold", field(&Config::classifier, &C::edge_threshold)},
      {"filter.edge_threshold", field(&Config::filter, &F::edge_threshold)},
      {"filter.similarity_distance", field(&Config::filter, &F::similarity_distance)},
      {"filter.similarity_span", field(&Config::filter, &F::similarity_span)},
      {"filter.blob_max_frac", field(&Config::filter, &F::blob_max_frac)},
      {"filter.board_keep_ratio", field(&Config::filter, &F::board_keep_ratio)},
      {"windows.height_frac", field(&Config::windows, &W::height_frac)},
      {"windows.low_frac", field(&Config::windows, &W::low_frac)},
      {"windows.high_frac", field(&Config::windows, &W::high_frac)},
      {"match.alpha", field(&Config::match, &M::alpha)},
      {"match.beta", field(&Config::match, &M::beta)},
      {"match.gamma", field(&Config::match, &M::gamma)},
      {"match.delta", field(&Config::match, &M::delta)},
      {"match.tau", field(&Config::match, &M::tau)},
      {"match.q_min", field(&Config::match, &M::q_min)},
      {"match.search_radius_frac", field(&Config::match, &M::search_radius_frac)},
      {"match.blur",
       [](Config& c, const std::string& v) {
         if (v == "open") c.match.blur = BlurMode::Open;
         else if (v == "dilate") c.match.blur = BlurMode::Dilate;
         else return false;
         return true;
       }},
      {"index.thumbnail_width", field(&Config::index, &IndexParams::thumbnail_width)},
      {"index.title",
       [](Config& c, const std::string& v) {
         c.index.title = v;
         return true;
       }},
  };
  return table;
}

}  // namespace

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end())
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (!it->second(cfg, value))
      throw ConfigError("config line " + std::to_string(line_no) + ": bad value '" + value +
                        "' for " + key);
  }
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace lectureseg
