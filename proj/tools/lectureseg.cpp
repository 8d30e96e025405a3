/*
 * lectureseg - command line front end
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lectureseg/config.hpp"
#include "lectureseg/cost_model.hpp"
#include "lectureseg/errors.hpp"
#include "lectureseg/index_builder.hpp"
#include "lectureseg/ingest.hpp"
#include "lectureseg/media_classifier.hpp"

namespace ls = lectureseg;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

ls::Config config_or_default(const std::string& path) {
  return path.empty() ? ls::Config{} : ls::load_config(path);
}

int run_index(const std::string& manifest, const std::string& config, const std::string& out,
              const std::string& thumbs, const std::string& trace) {
  ls::BuildOptions opt;
  if (!thumbs.empty()) opt.thumbnail_dir = thumbs;
  if (!trace.empty()) opt.trace_dir = trace;
  const auto idx = ls::build_index(manifest, config_or_default(config), opt);
  ls::write_index(idx, out);
  std::size_t errors = 0;
  for (const auto& f : idx.frames)
    if (f.error) {
      ++errors;
      std::cerr << "frame " << f.frame_id << ": " << *f.error << "\n";
    }
  std::cerr << idx.frames.size() << " frames, " << idx.topics.size() << " topics, " << errors
            << " failed\n";
  return 0;
}

int run_classify(const std::string& manifest, const std::string& config) {
  const auto cfg = config_or_default(config);
  for (const auto& e : ls::load_manifest(manifest)) {
    std::cout << e.frame_id << '\t';
    try {
      const auto c = ls::classify_traced(ls::load_frame(e), e.external_label, cfg.classifier);
      std::cout << ls::to_string(c.type) << '\t' << ls::to_string(c.path) << '\n';
    } catch (const ls::Error& err) {
      std::cout << "error\t" << err.what() << '\n';
    }
  }
  return 0;
}

int run_bench(int frames, double p_exact, double p_prev, double p_new, double topic_ratio,
              int trials, std::uint64_t seed, const std::string& json_path) {
  const ls::MatchProbabilities p{p_exact, p_prev, p_new};
  p.validate();
  if (frames < 1) throw ls::Error("--frames must be positive");
  if (trials < 1) throw ls::Error("--trials must be positive");
  if (topic_ratio < 0) topic_ratio = p_new;
  const auto report = ls::simulate_workload(frames, p, seed, trials);

  std::cout << std::setw(8) << "f" << std::setw(14) << "observed" << std::setw(14) << "closed_form"
            << "\n";
  std::cout << std::fixed << std::setprecision(3);
  const int stride = std::max(1, frames / 20);
  for (int f = stride; f <= frames; f += stride) {
    std::cout << std::setw(8) << f << std::setw(14) << report.cumulative[static_cast<std::size_t>(f - 1)]
              << std::setw(14) << ls::closed_form_matches(f, p, topic_ratio) << "\n";
  }
  std::cout << "fit: M(f) = " << std::setprecision(6) << report.fit.a << " f + " << report.fit.b
            << " f^2  (rms " << report.fit.residual << ")\n";

  nlohmann::json j = {{"frames", frames},
                      {"trials", trials},
                      {"seed", seed},
                      {"probabilities",
                       {{"p_exact", p_exact}, {"p_previous", p_prev}, {"p_new_topic", p_new}}},
                      {"topic_ratio", topic_ratio},
                      {"per_frame_calls", report.per_frame_calls},
                      {"cumulative", report.cumulative},
                      {"mean_topics", report.topics},
                      {"closed_form_total", ls::closed_form_matches(frames, p, topic_ratio)},
                      {"fit", {{"a", report.fit.a}, {"b", report.fit.b}, {"rms", report.fit.residual}}}};
  if (json_path.empty() || json_path == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw ls::IoError("cannot write " + json_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Key-frame media classification and topic indexing for lecture videos"};
  app.require_subcommand(1);

  std::string manifest, config, out = "index.json", thumbs, trace;
  auto* index = app.add_subcommand("index", "Build the topic index for a frame manifest");
  index->add_option("--manifest", manifest, "Frame manifest (TSV)")->required();
  index->add_option("--config", config, "Config file (key = value)");
  index->add_option("--out", out, "Output index path");
  index->add_option("--thumbs", thumbs, "Thumbnail output directory");
  index->add_option("--dump-trace", trace, "Write per-stage filter images here");

  auto* classify = app.add_subcommand("classify", "Print the media type of every frame");
  classify->add_option("--manifest", manifest, "Frame manifest (TSV)")->required();
  classify->add_option("--config", config, "Config file (key = value)");

  int frames = 200, trials = 100;
  double p_exact = 0.89, p_prev = 0.036, p_new = 0.074, topic_ratio = -1.0;
  std::uint64_t seed = 1;
  std::string json_path;
  auto* bench = app.add_subcommand("bench", "Simulate match-call cost and compare with the closed form");
  bench->add_option("--frames", frames, "Frames per simulated video");
  bench->add_option("--p-exact", p_exact, "Probability of matching the most recent topic");
  bench->add_option("--p-prev", p_prev, "Probability of matching an older topic");
  bench->add_option("--p-new", p_new, "Probability of starting a new topic");
  bench->add_option("--topic-ratio", topic_ratio, "Topics per frame for the closed form (default: p-new)");
  bench->add_option("--trials", trials, "Seeded trials to average");
  bench->add_option("--seed", seed, "First seed");
  bench->add_option("--json", json_path, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*index) return run_index(manifest, config, out, thumbs, trace);
    if (*classify) return run_classify(manifest, config);
    if (*bench) return run_bench(frames, p_exact, p_prev, p_new, topic_ratio, trials, seed, json_path);
  } catch (const ls::Error& e) {
    std::cerr << "lectureseg: " << e.what() << "\n";
    return e.input_error() ? kExitInput : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "lectureseg: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
