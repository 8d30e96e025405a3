/*
 * lectureseg - match-count cost model
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "lectureseg/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "lectureseg/errors.hpp"
#include "lectureseg/topic_cluster.hpp"

namespace lectureseg {

void MatchProbabilities::validate() const {
  for (double v : {p_exact, p_previous, p_new_topic})
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidProbabilities("probabilities must lie in [0,1]");
  if (std::abs(p_exact + p_previous + p_new_topic - 1.0) > 1e-9)
    throw InvalidProbabilities("probabilities must sum to 1");
}

double closed_form_matches(double f, const MatchProbabilities& p, double topic_ratio) {
  p.validate();
  if (f < 0) throw InvalidProbabilities("frame count must be non-negative");
  // Per frame k: p_exact * 1 + p_previous * topics/2 + p_new_topic * topics,
  // topics = topic_ratio * k; the integral over [0, f] gives the quadratic term.
  const double quadratic = (p.p_previous / 2.0 + p.p_new_topic) * topic_ratio / 2.0;
  return p.p_exact * f + quadratic * f * f;
}

QuadraticFit fit_quadratic(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw DegenerateSystem("need at least 3 points");
  std::vector<double> fs;
  for (const auto& [f, _] : points) fs.push_back(f);
  std::sort(fs.begin(), fs.end());
  if (std::adjacent_find(fs.begin(), fs.end()) != fs.end())
    throw DegenerateSystem("frame counts must be distinct");

  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double f = points[static_cast<std::size_t>(i)].first;
    design(i, 0) = f;
    design(i, 1) = f * f;
    rhs(i) = points[static_cast<std::size_t>(i)].second;
  }
  const auto qr = design.colPivHouseholderQr();
  if (qr.rank() < 2) throw DegenerateSystem("design matrix is rank deficient");
  const Eigen::Vector2d coef = qr.solve(rhs);

  QuadraticFit fit;
  fit.a = coef(0);
  fit.b = coef(1);
  fit.residual = std::sqrt((design * coef - rhs).squaredNorm() / static_cast<double>(n));
  return fit;
}

CostReport simulate_workload(int f, const MatchProbabilities& p, std::uint64_t seed) {
  p.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // The oracle succeeds on probe number `target` of the current frame
  // (0 = most recent topic); -1 never succeeds.
  int target = -1;
  int probe = 0;
  TopicClusterer clusterer([&](const ClusterFrame&, const ClusterFrame&) {
    return probe++ == target;
  });

  CostReport report;
  report.trials = 1;
  double running = 0.0;
  for (int k = 0; k < f; ++k) {
    const auto topics = static_cast<int>(clusterer.topics().size());
    const double u = unit(rng);
    if (u < p.p_exact) {
      target = 0;
    } else if (u < p.p_exact + p.p_previous && topics >= 2) {
      target = std::uniform_int_distribution<int>(1, topics - 1)(rng);
    } else {
      target = -1;
    }
    probe = 0;
    const auto& a = clusterer.add({k, MediaType::Board, nullptr});
    report.per_frame_calls.push_back(a.match_calls);
    running += a.match_calls;
    report.cumulative.push_back(running);
  }
  report.topics = static_cast<double>(clusterer.topics().size());

  if (f >= 3) {
    std::vector<std::pair<double, double>> points;
    for (int k = 0; k < f; ++k) points.emplace_back(k + 1, report.cumulative[static_cast<std::size_t>(k)]);
    report.fit = fit_quadratic(points);
  }
  return report;
}

CostReport simulate_workload(int f, const MatchProbabilities& p, std::uint64_t seed, int trials) {
  CostReport mean;
  mean.trials = trials;
  mean.per_frame_calls.assign(static_cast<std::size_t>(std::max(f, 0)), 0.0);
  mean.cumulative.assign(static_cast<std::size_t>(std::max(f, 0)), 0.0);
  for (int t = 0; t < trials; ++t) {
    const CostReport r = simulate_workload(f, p, seed + static_cast<std::uint64_t>(t));
    for (std::size_t k = 0; k < mean.per_frame_calls.size(); ++k) {
      mean.per_frame_calls[k] += r.per_frame_calls[k] / trials;
      mean.cumulative[k] += r.cumulative[k] / trials;
    }
    mean.topics += r.topics / trials;
  }
  if (f >= 3 && trials > 0) {
    std::vector<std::pair<double, double>> points;
    for (int k = 0; k < f; ++k) points.emplace_back(k + 1, mean.cumulative[static_cast<std::size_t>(k)]);
    mean.fit = fit_quadratic(points);
  }
  return mean;
}

}  // namespace lectureseg
