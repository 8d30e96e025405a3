/*
 * lectureseg - end-to-end pipeline and topic index serialization
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "lectureseg/index_builder.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "lectureseg/content_filter.hpp"
#include "lectureseg/errors.hpp"
#include "lectureseg/ingest.hpp"
#include "lectureseg/matcher.hpp"
#include "lectureseg/media_classifier.hpp"
#include "lectureseg/topic_cluster.hpp"

namespace lectureseg {

namespace {

struct ProcessedFrame {
  FrameManifestEntry entry;
  std::optional<MediaType> media;  // empty on failure
  BinaryImage content;
  std::string thumbnail_path;
  std::string error;
};

void process_frame(ProcessedFrame& pf, const Config& cfg, const BuildOptions& opt) {
  try {
    const Raster r = load_frame(pf.entry);
    const MediaType media = classify(r, pf.entry.external_label, cfg.classifier);

    if (opt.thumbnail_dir) {
      const auto path = *opt.thumbnail_dir / (std::to_string(pf.entry.frame_id) + ".png");
      write_png(downscale_to_width(r, cfg.index.thumbnail_width), path);
      pf.thumbnail_path = path.generic_string();
    }

    if (is_clusterable(media)) {
      const bool trace = opt.trace_dir.has_value();
      ContentExtraction ex = media == MediaType::Board ? extract_board_content(r, cfg, trace)
                                                       : extract_sheet_content(r, cfg, trace);
      if (trace) {
        const std::string stem = std::to_string(pf.entry.frame_id) + "_";
        write_png(ex.trace.original, *opt.trace_dir / (stem + "a.png"));
        for (const auto& [key, img] : ex.trace.stages)
          write_png(img, *opt.trace_dir / (stem + key + ".png"));
      }
      pf.content = std::move(ex.content);
    }
    pf.media = media;
  } catch (const Error& e) {
    pf.media.reset();
    pf.error = e.what();
  }
}

void process_all(std::vector<ProcessedFrame>& frames, const Config& cfg, const BuildOptions& opt) {
  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(frames.size())));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < frames.size(); i = next++) process_frame(frames[i], cfg, opt);
  };
  if (workers <= 1) {
    run();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
}

}  // namespace

TopicIndex build_index(const std::filesystem::path& manifest_path, const Config& cfg,
                       const BuildOptions& options) {
  const auto entries = load_manifest(manifest_path);
  for (const auto& dir : {options.thumbnail_dir, options.trace_dir})
    if (dir) {
      std::error_code ec;
      std::filesystem::create_directories(*dir, ec);
      if (ec) throw IoError("cannot create " + dir->string() + ": " + ec.message());
    }

  std::vector<ProcessedFrame> frames(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) frames[i].entry = entries[i];
  process_all(frames, cfg, options);

  TopicClusterer clusterer([&](const ClusterFrame& older, const ClusterFrame& newer) {
    return match_pair(*older.content, *newer.content, newer.media, cfg).accepted;
  });

  TopicIndex idx;
  idx.title = cfg.index.title.empty() ? manifest_path.stem().string() : cfg.index.title;
  idx.duration_ms = entries.empty() ? 0 : entries.back().timestamp_ms;

  std::vector<std::string> labels;
  std::map<std::int64_t, std::size_t> position;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto& pf = frames[i];
    position[pf.entry.frame_id] = i;
    IndexedFrame f;
    f.frame_id = pf.entry.frame_id;
    f.timestamp_ms = pf.entry.timestamp_ms;
    f.thumbnail_path = pf.thumbnail_path;
    if (pf.media) {
      f.media_type = std::string(to_string(*pf.media));
      f.topic_label = clusterer.add({pf.entry.frame_id, *pf.media, &pf.content}).label;
    } else {
      f.media_type = "error";
      f.topic_label = kOtherLabel;
      f.error = pf.error;
    }
    labels.push_back(f.topic_label);
    idx.frames.push_back(std::move(f));
  }

  for (const Topic& t : clusterer.topics()) {
    IndexedTopic it;
    it.label = t.label;
    it.media_type = std::string(to_string(t.media));
    it.frame_ids = t.frame_ids;
    it.first_timestamp_ms = frames[position.at(t.frame_ids.front())].entry.timestamp_ms;
    it.last_timestamp_ms = frames[position.at(t.frame_ids.back())].entry.timestamp_ms;
    for (std::size_t k = 1; k < t.frame_ids.size(); ++k)
      if (position.at(t.frame_ids[k]) != position.at(t.frame_ids[k - 1]) + 1) it.contiguous = false;
    idx.topics.push_back(std::move(it));
  }
  idx.runs = encode_runs(labels);
  return idx;
}

TopicIndex build_index(const std::filesystem::path& manifest_path,
                       const std::filesystem::path& config_path, const BuildOptions& options) {
  return build_index(manifest_path, load_config(config_path), options);
}

nlohmann::json to_json(const TopicIndex& idx) {
  nlohmann::json frames = nlohmann::json::array();
  for (const auto& f : idx.frames) {
    nlohmann::json j = {{"frame_id", f.frame_id},
                        {"timestamp_ms", f.timestamp_ms},
                        {"media_type", f.media_type},
                        {"topic_label", f.topic_label},
                        {"thumbnail_path", f.thumbnail_path}};
    if (f.error) j["error"] = *f.error;
    frames.push_back(std::move(j));
  }
  nlohmann::json topics = nlohmann::json::array();
  for (const auto& t : idx.topics)
    topics.push_back({{"label", t.label},
                      {"media_type", t.media_type},
                      {"frame_ids", t.frame_ids},
                      {"first_timestamp_ms", t.first_timestamp_ms},
                      {"last_timestamp_ms", t.last_timestamp_ms},
                      {"contiguous", t.contiguous}});
  return {{"schema", kIndexSchema},
          {"video", {{"title", idx.title}, {"duration_ms", idx.duration_ms}}},
          {"frames", std::move(frames)},
          {"topics", std::move(topics)},
          {"runs", idx.runs}};
}

TopicIndex index_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<int>() != kIndexSchema)
      throw Error("unsupported index schema " + j.at("schema").dump());
    TopicIndex idx;
    idx.title = j.at("video").at("title").get<std::string>();
    idx.duration_ms = j.at("video").at("duration_ms").get<std::int64_t>();
    for (const auto& f : j.at("frames")) {
      IndexedFrame fr;
      fr.frame_id = f.at("frame_id").get<std::int64_t>();
      fr.timestamp_ms = f.at("timestamp_ms").get<std::int64_t>();
      fr.media_type = f.at("media_type").get<std::string>();
      fr.topic_label = f.at("topic_label").get<std::string>();
      fr.thumbnail_path = f.at("thumbnail_path").get<std::string>();
      if (f.contains("error")) fr.error = f.at("error").get<std::string>();
      idx.frames.push_back(std::move(fr));
    }
    for (const auto& t : j.at("topics")) {
      IndexedTopic it;
      it.label = t.at("label").get<std::string>();
      it.media_type = t.at("media_type").get<std::string>();
      it.frame_ids = t.at("frame_ids").get<std::vector<std::int64_t>>();
      it.first_timestamp_ms = t.at("first_timestamp_ms").get<std::int64_t>();
      it.last_timestamp_ms = t.at("last_timestamp_ms").get<std::int64_t>();
      it.contiguous = t.at("contiguous").get<bool>();
      idx.topics.push_back(std::move(it));
    }
    idx.runs = j.at("runs").get<std::string>();
    return idx;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed index: ") + e.what());
  }
}

std::string serialize_index(const TopicIndex& idx) { return to_json(idx).dump(2) + "\n"; }

void write_index(const TopicIndex& idx, const std::filesystem::path& out_path) {
  const std::string text = serialize_index(idx);
  auto tmp = out_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, out_path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move index into " + out_path.string() + ": " + ec.message());
  }
}

TopicIndex read_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed index: ") + e.what());
  }
  return index_from_json(j);
}

}  // namespace lectureseg
