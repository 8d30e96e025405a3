/*
 * lectureseg - end-to-end pipeline and topic index serialization
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

#include <nlohmann/json.hpp>

#include "lectureseg/config.hpp"

namespace lectureseg {

inline constexpr int kIndexSchema = 1;

struct IndexedFrame {
  std::int64_t frame_id = 0;
  std::int64_t timestamp_ms = 0;
  std::string media_type;  // media type name, or "error"
  std::string topic_label;
  std::string thumbnail_path;
  std::optional<std::string> error;

  friend bool operator==(const IndexedFrame&, const IndexedFrame&) = default;
};

struct IndexedTopic {
  std::string label;
  std::string media_type;
  std::vector<std::int64_t> frame_ids;
  std::int64_t first_timestamp_ms = 0;
  std::int64_t last_timestamp_ms = 0;
  bool contiguous = true;

  friend bool operator==(const IndexedTopic&, const IndexedTopic&) = default;
};

struct TopicIndex {
  std::string title;
  std::int64_t duration_ms = 0;
  std::vector<IndexedFrame> frames;  // manifest order
  std::vector<IndexedTopic> topics;  // creation order
  std::string runs;

  friend bool operator==(const TopicIndex&, const TopicIndex&) = default;
};

struct BuildOptions {
  std::optional<std::filesystem::path> thumbnail_dir;
  std::optional<std::filesystem::path> trace_dir;
};

// ingest -> classify -> extract (board/sheet) -> cluster -> index. A frame
// that fails to load or filter is kept with media_type "error" and a reason.
TopicIndex build_index(const std::filesystem::path& manifest_path, const Config& cfg,
                       const BuildOptions& options = {});
TopicIndex build_index(const std::filesystem::path& manifest_path,
                       const std::filesystem::path& config_path, const BuildOptions& options = {});

nlohmann::json to_json(const TopicIndex& idx);
TopicIndex index_from_json(const nlohmann::json& j);

// Canonical form: sorted keys, two-space indent, LF, trailing newline.
std::string serialize_index(const TopicIndex& idx);

// Writes through a temporary sibling file and renames it into place.
void write_index(const TopicIndex& idx, const std::filesystem::path& out_path);
TopicIndex read_index(const std::filesystem::path& path);

}  // namespace lectureseg
