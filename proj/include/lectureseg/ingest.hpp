/*
 * lectureseg - frame manifest and image decoding
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lectureseg/image.hpp"

namespace lectureseg {

inline constexpr int kMinFrameWidth = 64;
inline constexpr int kMinFrameHeight = 48;

struct FrameManifestEntry {
  std::int64_t frame_id = 0;
  std::int64_t timestamp_ms = 0;
  std::filesystem::path image_path;
  std::optional<std::string> external_label;

  friend bool operator==(const FrameManifestEntry&, const FrameManifestEntry&) = default;
};

// Manifest format, one frame per line:
//   frame_id <TAB> timestamp_ms <TAB> image_path [<TAB> label]
// Blank lines and lines starting with '#' are skipped. Relative image paths
// are resolved against the manifest's directory.
std::vector<FrameManifestEntry> load_manifest(const std::filesystem::path& path);
std::vector<FrameManifestEntry> parse_manifest(const std::string& text,
                                               const std::filesystem::path& base_dir = {});

// Decodes the image; grayscale inputs come back with R=G=B.
// Throws DecodeError, or DimensionError for frames below 64x48.
Raster load_frame(const FrameManifestEntry& entry);
Raster decode_image(const std::filesystem::path& path);

// Lossless PNG output. Binary images are written as 1-bit bilevel PNGs.
void write_png(const Raster& r, const std::filesystem::path& path);
void write_png(const BinaryImage& b, const std::filesystem::path& path);

// Area-averaged downscale to the given width, aspect preserved.
Raster downscale_to_width(const Raster& r, int width);

}  // namespace lectureseg
