/*
 * lectureseg - match-count cost model
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lectureseg {

struct MatchProbabilities {
  double p_exact = 0.89;      // incoming frame matches the most recent topic
  double p_previous = 0.036;  // matches some older topic
  double p_new_topic = 0.074; // matches nothing

  // Throws InvalidProbabilities unless each is in [0,1] and they sum to 1 (+-1e-9).
  void validate() const;
};

// Expected cumulative match calls after f frames when the topic count grows
// as topic_ratio * f: each frame costs p_exact + (p_previous/2 + p_new_topic)
// * topics, integrated over frames.
double closed_form_matches(double f, const MatchProbabilities& p, double topic_ratio);

struct QuadraticFit {
  double a = 0.0;  // linear coefficient
  double b = 0.0;  // quadratic coefficient
  double residual = 0.0;  // RMS
};

// Least squares M = a*f + b*f^2 with no constant term. Needs >= 3 points
// with distinct f; throws DegenerateSystem otherwise.
QuadraticFit fit_quadratic(const std::vector<std::pair<double, double>>& points);

struct CostReport {
  std::vector<double> per_frame_calls;  // mean over trials
  std::vector<double> cumulative;       // cumulative[k] = calls after k+1 frames
  double topics = 0.0;                  // mean topic count
  QuadraticFit fit;
  int trials = 0;
};

// Runs the topic clusterer on f frames with a stochastic oracle drawing each
// frame's outcome from p. Prior-topic matches target a uniformly chosen older
// topic; with a single topic such a draw opens a new topic instead.
CostReport simulate_workload(int f, const MatchProbabilities& p, std::uint64_t seed);

// Mean of `trials` runs with seeds seed, seed+1, ...
CostReport simulate_workload(int f, const MatchProbabilities& p, std::uint64_t seed, int trials);

}  // namespace lectureseg
