/*
 * lectureseg - online topic clustering and run-length notation
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "lectureseg/topic_cluster.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "lectureseg/errors.hpp"

namespace lectureseg {

std::string topic_label(std::size_t creation_index) {
  static constexpr std::string_view kAlphabet = "ABCDEFGHIJKLMNOPQRSTUVW";
  const std::size_t base = kAlphabet.size();
  std::string out;
  std::size_t n = creation_index;
  for (;;) {
    out.insert(out.begin(), kAlphabet[n % base]);
    if (n < base) break;
    n = n / base - 1;
  }
  return out;
}

std::string unclustered_label(MediaType t) {
  switch (t) {
    case MediaType::Podium: return kPodiumLabel;
    case MediaType::Computer: return kComputerLabel;
    default: return kOtherLabel;
  }
}

TopicClusterer::TopicClusterer(MatchOracle match) : match_(std::move(match)) {}

const FrameAssignment& TopicClusterer::add(const ClusterFrame& frame) {
  FrameAssignment a;
  a.frame_id = frame.frame_id;
  if (!is_clusterable(frame.media)) {
    a.label = unclustered_label(frame.media);
    assignments_.push_back(std::move(a));
    return assignments_.back();
  }

  std::size_t hit = topics_.size();
  for (auto it = recency_.begin(); it != recency_.end(); ++it) {
    const std::size_t t = *it;
    if (topics_[t].media != frame.media) continue;
    ++a.match_calls;
    if (match_(latest_[t], frame)) {
      hit = t;
      recency_.erase(it);
      break;
    }
  }

  if (hit == topics_.size()) {
    topics_.push_back({topic_label(topics_.size()), frame.media, {}});
    latest_.push_back(frame);
  }
  topics_[hit].frame_ids.push_back(frame.frame_id);
  latest_[hit] = frame;
  recency_.insert(recency_.begin(), hit);

  a.label = topics_[hit].label;
  total_calls_ += static_cast<std::size_t>(a.match_calls);
  assignments_.push_back(std::move(a));
  return assignments_.back();
}

std::vector<Topic> TopicClusterer::topics_by_recency() const {
  std::vector<Topic> out;
  out.reserve(recency_.size());
  for (std::size_t t : recency_) out.push_back(topics_[t]);
  return out;
}

TopicList cluster_frames(const std::vector<ClusterFrame>& frames, const MatchOracle& match) {
  TopicClusterer c(match);
  for (const auto& f : frames) c.add(f);
  return {c.topics_by_recency(), c.assignments(), c.total_match_calls()};
}

std::string encode_runs(const std::vector<std::string>& labels) {
  std::ostringstream out;
  std::size_t i = 0;
  while (i < labels.size()) {
    std::size_t j = i;
    while (j < labels.size() && labels[j] == labels[i]) ++j;
    if (i > 0) out << ' ';
    out << labels[i] << '^' << (j - i);
    i = j;
  }
  return out.str();
}

std::vector<std::string> decode_runs(const std::string& runs) {
  std::vector<std::string> out;
  std::istringstream in(runs);
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    if (caret == 0 || caret == std::string::npos || caret + 1 == token.size())
      throw ParseError("bad run token '" + token + "'", 1);
    std::size_t count = 0;
    const char* first = token.data() + caret + 1;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, count);
    if (ec != std::errc{} || ptr != last || count == 0)
      throw ParseError("bad run length in '" + token + "'", 1);
    out.insert(out.end(), count, token.substr(0, caret));
  }
  return out;
}

}  // namespace lectureseg
