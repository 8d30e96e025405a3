/*
 * lectureseg - online topic clustering and run-length notation
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lectureseg/image.hpp"
#include "lectureseg/media_classifier.hpp"

namespace lectureseg {

struct ClusterFrame {
  std::int64_t frame_id = 0;
  MediaType media = MediaType::Illustration;
  const BinaryImage* content = nullptr;  // set for Board and Sheet frames
};

// Returns true when `newer` elaborates `older`.
using MatchOracle = std::function<bool(const ClusterFrame& older, const ClusterFrame& newer)>;

struct Topic {
  std::string label;
  MediaType media = MediaType::Board;
  std::vector<std::int64_t> frame_ids;

  std::int64_t most_recent_frame() const { return frame_ids.back(); }
};

// Reserved labels for frames that are never matched.
inline constexpr const char* kPodiumLabel = "X";
inline constexpr const char* kComputerLabel = "Y";
inline constexpr const char* kOtherLabel = "Z";

// Topic labels in creation order: A..W, then AA, AB, ... (X, Y, Z excluded).
std::string topic_label(std::size_t creation_index);

std::string unclustered_label(MediaType t);

struct FrameAssignment {
  std::int64_t frame_id = 0;
  std::string label;
  int match_calls = 0;
};

// One-pass clusterer. Each Board/Sheet frame is tried against the most recent
// frame of each same-media topic in recency order; the first success extends
// that topic and makes it the most recent, otherwise the frame opens a new
// topic. Other media are labeled X/Y/Z and never matched.
class TopicClusterer {
 public:
  explicit TopicClusterer(MatchOracle match);

  const FrameAssignment& add(const ClusterFrame& frame);

  // Most recent topic first.
  std::vector<Topic> topics_by_recency() const;
  // Creation order.
  const std::vector<Topic>& topics() const noexcept { return topics_; }
  const std::vector<FrameAssignment>& assignments() const noexcept { return assignments_; }
  std::size_t total_match_calls() const noexcept { return total_calls_; }

 private:
  MatchOracle match_;
  std::vector<Topic> topics_;
  std::vector<ClusterFrame> latest_;   // most recent frame per topic
  std::vector<std::size_t> recency_;   // topic indices, most recent first
  std::vector<FrameAssignment> assignments_;
  std::size_t total_calls_ = 0;
};

struct TopicList {
  std::vector<Topic> topics;  // most recent first
  std::vector<FrameAssignment> assignments;
  std::size_t total_match_calls = 0;
};

TopicList cluster_frames(const std::vector<ClusterFrame>& frames, const MatchOracle& match);

// "A^2 X^1 B^1": maximal runs of equal labels, space separated.
std::string encode_runs(const std::vector<std::string>& labels);
// Inverse of encode_runs; throws ParseError on malformed tokens.
std::vector<std::string> decode_runs(const std::string& runs);

}  // namespace lectureseg
