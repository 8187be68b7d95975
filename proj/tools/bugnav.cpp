// bugnav: recommend closed issues from other projects that describe a bug
// similar to a given open issue, and evaluate/tune the ranking offline.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "bugnav/cli/output.hpp"
#include "bugnav/cli/recommend.hpp"
#include "bugnav/cli/run_config.hpp"
#include "bugnav/cli/session.hpp"
#include "bugnav/corpus/json.hpp"
#include "bugnav/corpus/miner.hpp"
#include "bugnav/error.hpp"
#include "bugnav/evalharness/dataset.hpp"
#include "bugnav/evalharness/evaluate.hpp"
#include "bugnav/log.hpp"
#include "bugnav/ranking/tuner.hpp"

namespace {

using namespace bugnav;

enum Exit { kOk = 0, kUsage = 1, kNoCandidates = 2, kQueryFailed = 3, kTransport = 4 };

struct CommonFlags {
  std::string config_path;
  std::string fixtures;
  std::string record;
  std::string cache_dir;
  std::string format;
  std::string output;
  std::vector<std::string> weight_overrides;
  unsigned parallelism = 0;
  bool verbose = false;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--config", f.config_path, "JSON config file")->check(CLI::ExistingFile);
  app->add_option("--fixtures", f.fixtures, "replay recorded responses from this directory (no network)")
      ->check(CLI::ExistingDirectory);
  app->add_option("--record", f.record, "record live responses into this directory");
  app->add_option("--cache-dir", f.cache_dir, "repository snapshot cache");
  app->add_option("--format", f.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app->add_option("--output,-o", f.output, "write the result to this file instead of stdout");
  app->add_option("--weight,-w", f.weight_overrides, "override a weight, e.g. w_code=0.5 (repeatable)");
  app->add_option("--parallelism", f.parallelism, "candidate fan-out limit");
  app->add_flag("--verbose,-v", f.verbose, "log progress to stderr");
}

cli::RunConfig resolve(const CommonFlags& f) {
  auto c = f.config_path.empty() ? cli::RunConfig{} : cli::load_config(f.config_path);
  if (!f.fixtures.empty()) c.fixture_dir = f.fixtures;
  if (!f.record.empty()) c.record_dir = f.record;
  if (!f.cache_dir.empty()) c.cache_dir = f.cache_dir;
  if (!f.format.empty()) c.format = f.format == "json" ? cli::OutputFormat::json : cli::OutputFormat::table;
  if (f.parallelism > 0) c.parallelism = f.parallelism;
  for (const auto& o : f.weight_overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ValidationError("weight override must look like name=value: " + o);
    nlohmann::json patch = nlohmann::json::object();
    try {
      patch[o.substr(0, eq)] = std::stod(o.substr(eq + 1));
    } catch (const std::exception&) {
      throw ValidationError("weight override value is not a number: " + o);
    }
    from_json(patch, c.weights);
  }
  if (f.verbose) logger()->set_level(spdlog::level::info);
  c.validate();
  return c;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Find similar bugs in other projects and rank them as navigators"};
  app.require_subcommand(1);

  CommonFlags rec_flags, eval_flags, mine_flags, tune_flags;

  auto* rec = app.add_subcommand("recommend", "rank issues similar to a driver issue");
  std::string issue_ref, issue_file;
  int n_threshold = 0, max_candidates = 0;
  std::string language;
  auto* ref_opt = rec->add_option("--issue", issue_ref, "driver issue as owner/repo#number");
  auto* file_opt = rec->add_option("--issue-file", issue_file, "driver issue as a local JSON file")
                       ->check(CLI::ExistingFile);
  ref_opt->excludes(file_opt);
  rec->add_option("--n-threshold", n_threshold, "minimum results before falling back to the next query");
  rec->add_option("--max-candidates", max_candidates, "search results to re-rank");
  rec->add_option("--language", language, "language filter for the search");
  add_common(rec, rec_flags);

  auto* ev = app.add_subcommand("evaluate", "compare platform order with re-ranked order on a labeled dataset");
  std::string eval_dataset;
  ev->add_option("--dataset", eval_dataset, "JSONL dataset")->required()->check(CLI::ExistingFile);
  add_common(ev, eval_flags);

  auto* mine = app.add_subcommand("mine", "collect candidate similar-bug pairs from cross-project links");
  std::vector<std::string> keywords;
  int cap = 100;
  mine->add_option("--keyword,-k", keywords, "search phrase (repeatable)")->required();
  mine->add_option("--cap", cap, "results per keyword");
  add_common(mine, mine_flags);

  auto* tune = app.add_subcommand("tune", "grid-search the similarity weights on a labeled dataset");
  std::string tune_dataset;
  double step = 0.0714;
  tune->add_option("--dataset", tune_dataset, "JSONL dataset")->required()->check(CLI::ExistingFile);
  tune->add_option("--step", step, "grid step");
  add_common(tune, tune_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rec) {
      auto config = resolve(rec_flags);
      if (n_threshold > 0) config.n_threshold = n_threshold;
      if (max_candidates > 0) config.max_candidates = max_candidates;
      if (!language.empty()) config.language = language;
      config.validate();
      if (issue_ref.empty() && issue_file.empty()) throw ValidationError("one of --issue or --issue-file is required");

      auto client = cli::make_client(config);
      cli::IssueInput input;
      if (!issue_file.empty()) {
        std::ifstream in(issue_file);
        try {
          input = nlohmann::json::parse(in).get<corpus::IssueDocument>();
        } catch (const nlohmann::json::exception& e) {
          throw ValidationError("issue file " + issue_file + ": " + e.what());
        }
      } else {
        input = corpus::IssueRef::parse(issue_ref);
      }
      const auto result = cli::recommend(input, config, *client);
      emit(config.format == cli::OutputFormat::json ? cli::to_json(result).dump(2) + "\n" : cli::render_table(result),
           rec_flags.output);
      if (result.ranked.empty()) {
        std::cerr << "no candidate issues found\n";
        return kNoCandidates;
      }
      return kOk;
    }

    if (*ev) {
      const auto config = resolve(eval_flags);
      const auto report =
          evalharness::evaluate(evalharness::load_dataset(eval_dataset), config.weights, config.parallelism);
      emit(config.format == cli::OutputFormat::json ? evalharness::to_json(report).dump(2) + "\n"
                                                    : evalharness::render_table(report),
           eval_flags.output);
      return kOk;
    }

    if (*mine) {
      const auto config = resolve(mine_flags);
      auto client = cli::make_client(config);
      corpus::MinerOptions opts;
      opts.language = config.language;
      const auto pairs = corpus::mine_similar_pairs(*client, keywords, cap, opts);
      std::string text;
      if (config.format == cli::OutputFormat::json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& p : pairs) j.push_back({{"driver", p.driver.str()}, {"navigator", p.navigator.str()}});
        text = j.dump(2) + "\n";
      } else {
        for (const auto& p : pairs) text += p.driver.str() + "\t" + p.navigator.str() + "\n";
      }
      emit(text, mine_flags.output);
      return kOk;
    }

    if (*tune) {
      const auto config = resolve(tune_flags);
      const auto result =
          ranking::tune_weights(evalharness::load_dataset(tune_dataset), step, config.weights, config.parallelism);
      emit(nlohmann::json(result.weights).dump(2) + "\n", tune_flags.output);
      std::cerr << fmt::format("evaluated {} weight combinations; MRR {:.4f} (start {:.4f})\n", result.evaluated,
                               result.mrr, result.baseline_mrr);
      return kOk;
    }
  } catch (const NoQueryError& e) {
    std::string tried;
    for (const auto& s : e.attempted()) tried += (tried.empty() ? "" : ", ") + s;
    std::cerr << "query construction failed: " << e.what() << " (attempted: " << (tried.empty() ? "none" : tried)
              << ")\n";
    return kQueryFailed;
  } catch (const RateLimitError& e) {
    std::cerr << "rate limited: " << e.what() << "; retry in " << e.wait().count() << "s\n";
    return kTransport;
  } catch (const TransportError& e) {
    std::cerr << "transport error: " << e.what() << "\n";
    return kTransport;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
