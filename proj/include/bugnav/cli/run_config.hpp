#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "bugnav/corpus/glob.hpp"
#include "bugnav/error.hpp"
#include "bugnav/ranking/factors.hpp"
#include "bugnav/ranking/quality.hpp"
#include "bugnav/ranking/weights.hpp"

namespace bugnav::cli {

enum class OutputFormat { table, json };

struct RunConfig {
  std::string auth_token_env = "GITHUB_TOKEN";
  std::string api_base = "https://api.github.com";
  std::filesystem::path cache_dir;
  std::optional<std::filesystem::path> fixture_dir;  // set: replay mode, no network
  std::optional<std::filesystem::path> record_dir;   // live mode, responses saved as fixtures
  ranking::WeightConfig weights;
  ranking::NormalizationCaps caps;
  std::vector<std::string> keywords = ranking::default_descriptive_keywords();
  int n_threshold = 5;
  int max_candidates = 10;
  std::string stack_trace_qualifier = "in:body,comments";
  std::string language = "java";
  std::string state = "closed";
  int min_match_len = 9;
  bool abstract_identifiers = true;
  std::vector<std::string> snapshot_globs = corpus::default_snapshot_globs();
  OutputFormat format = OutputFormat::table;
  unsigned parallelism = 4;

  void validate() const {
    if (fixture_dir && record_dir) throw ValidationError("replay (--fixtures) and recording (--record) are exclusive");
    if (n_threshold < 1) throw ValidationError("n_threshold must be >= 1");
    if (max_candidates < 1 || max_candidates > 100) throw ValidationError("max_candidates must be within 1..100");
    if (min_match_len < 1) throw ValidationError("min_match_len must be >= 1");
    if (parallelism < 1) throw ValidationError("parallelism must be >= 1");
    if (snapshot_globs.empty()) throw ValidationError("snapshot_globs must not be empty");
    weights.validate();
  }
};

/// Applies the keys present in a config object; absent keys keep defaults.
inline void apply_config(RunConfig& c, const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "auth_token_env") c.auth_token_env = v.get<std::string>();
      else if (key == "api_base") c.api_base = v.get<std::string>();
      else if (key == "cache_dir") c.cache_dir = v.get<std::string>();
      else if (key == "fixture_dir") c.fixture_dir = v.get<std::string>();
      else if (key == "record_dir") c.record_dir = v.get<std::string>();
      else if (key == "weights") v.get_to(c.weights);
      else if (key == "normalization") {
        c.caps.words = v.value("words", c.caps.words);
        c.caps.comments = v.value("comments", c.caps.comments);
        c.caps.keywords = v.value("keywords", c.caps.keywords);
      } else if (key == "keywords") c.keywords = v.get<std::vector<std::string>>();
      else if (key == "n_threshold") c.n_threshold = v.get<int>();
      else if (key == "max_candidates") c.max_candidates = v.get<int>();
      else if (key == "stack_trace_qualifier") c.stack_trace_qualifier = v.get<std::string>();
      else if (key == "language") c.language = v.get<std::string>();
      else if (key == "state") c.state = v.get<std::string>();
      else if (key == "min_match_len") c.min_match_len = v.get<int>();
      else if (key == "abstract_identifiers") c.abstract_identifiers = v.get<bool>();
      else if (key == "snapshot_globs") c.snapshot_globs = v.get<std::vector<std::string>>();
      else if (key == "parallelism") c.parallelism = v.get<unsigned>();
      else if (key == "output_format") {
        const auto f = v.get<std::string>();
        if (f == "table") c.format = OutputFormat::table;
        else if (f == "json") c.format = OutputFormat::json;
        else throw ValidationError("output_format must be table or json");
      } else {
        throw ValidationError("unknown config key: " + key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad config value: ") + e.what());
  }
}

inline RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config " + path.string());
  RunConfig c;
  try {
    apply_config(c, nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("config " + path.string() + ": " + e.what());
  }
  return c;
}

}  // namespace bugnav::cli
