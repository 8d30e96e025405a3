/*
 * lectureseg - frame manifest and image decoding
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "lectureseg/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "lectureseg/errors.hpp"

namespace lectureseg {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = line.find('\t', start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_nonneg(const std::string& s, const char* field, std::size_t line_no) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError(std::string("bad ") + field + " '" + s + "'", line_no);
  if (v < 0) throw ParseError(std::string(field) + " must be non-negative", line_no);
  return v;
}

Raster from_mat(const cv::Mat& bgr) {
  Raster r(bgr.cols, bgr.rows);
  for (int y = 0; y < bgr.rows; ++y) {
    const auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) r.at(x, y) = {row[x][2], row[x][1], row[x][0]};
  }
  return r;
}

cv::Mat to_mat(const Raster& r) {
  cv::Mat m(r.height(), r.width(), CV_8UC3);
  for (int y = 0; y < r.height(); ++y) {
    auto* row = m.ptr<cv::Vec3b>(y);
    for (int x = 0; x < r.width(); ++x) {
      const Rgb p = r.at(x, y);
      row[x] = cv::Vec3b(p.b, p.g, p.r);
    }
  }
  return m;
}

void checked_write(const std::filesystem::path& path, const cv::Mat& m,
                   const std::vector<int>& params) {
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), m, params);
  } catch (const cv::Exception& e) {
    throw IoError("cannot write " + path.string() + ": " + e.what());
  }
  if (!ok) throw IoError("cannot write " + path.string());
}

}  // namespace

std::vector<FrameManifestEntry> parse_manifest(const std::string& text,
                                               const std::filesystem::path& base_dir) {
  std::vector<FrameManifestEntry> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    auto fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 4)
      throw ParseError("expected 3 or 4 tab-separated fields, got " +
                           std::to_string(fields.size()),
                       line_no);

    FrameManifestEntry e;
    e.frame_id = parse_nonneg(fields[0], "frame_id", line_no);
    e.timestamp_ms = parse_nonneg(fields[1], "timestamp_ms", line_no);
    if (fields[2].empty()) throw ParseError("empty image path", line_no);
    e.image_path = fields[2];
    if (e.image_path.is_relative() && !base_dir.empty()) e.image_path = base_dir / e.image_path;
    if (fields.size() == 4 && !fields[3].empty()) e.external_label = fields[3];

    if (!entries.empty()) {
      if (e.frame_id <= entries.back().frame_id)
        throw OrderError("frame_id " + std::to_string(e.frame_id) + " does not increase", line_no);
      if (e.timestamp_ms < entries.back().timestamp_ms)
        throw OrderError("timestamp " + std::to_string(e.timestamp_ms) + " decreases", line_no);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<FrameManifestEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open manifest " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str(), path.parent_path());
}

Raster decode_image(const std::filesystem::path& path) {
  cv::Mat m;
  try {
    // IMREAD_COLOR expands grayscale to three equal channels.
    m = cv::imread(path.string(), cv::IMREAD_COLOR);
  } catch (const cv::Exception& e) {
    throw DecodeError("cannot decode " + path.string() + ": " + e.what());
  }
  if (m.empty()) throw DecodeError("cannot decode " + path.string());
  return from_mat(m);
}

Raster load_frame(const FrameManifestEntry& entry) {
  Raster r = decode_image(entry.image_path);
  if (r.width() < kMinFrameWidth || r.height() < kMinFrameHeight)
    throw DimensionError(entry.image_path.string() + ": " + std::to_string(r.width()) + "x" +
                         std::to_string(r.height()) + " is below the 64x48 minimum");
  return r;
}

void write_png(const Raster& r, const std::filesystem::path& path) {
  checked_write(path, to_mat(r), {cv::IMWRITE_PNG_COMPRESSION, 6});
}

void write_png(const BinaryImage& b, const std::filesystem::path& path) {
  cv::Mat m(b.height(), b.width(), CV_8UC1);
  for (int y = 0; y < b.height(); ++y) {
    auto* row = m.ptr<std::uint8_t>(y);
    for (int x = 0; x < b.width(); ++x) row[x] = b.at(x, y) ? 255 : 0;
  }
  checked_write(path, m, {cv::IMWRITE_PNG_BILEVEL, 1});
}

Raster downscale_to_width(const Raster& r, int width) {
  if (width <= 0 || r.empty()) return r;
  if (width >= r.width()) return r;
  const int height = std::max(1, static_cast<int>(std::lround(
                                     static_cast<double>(r.height()) * width / r.width())));
  cv::Mat out;
  cv::resize(to_mat(r), out, cv::Size(width, height), 0, 0, cv::INTER_AREA);
  return from_mat(out);
}

}  // namespace lectureseg
