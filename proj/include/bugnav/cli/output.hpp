#pragma once

#include <string>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "bugnav/cli/recommend.hpp"
#include "bugnav/evalharness/dataset.hpp"

namespace bugnav::cli {

inline nlohmann::json query_to_json(const querygen::SearchQuery& q) {
  return {{"strategy", querygen::to_string(q.strategy)},
          {"text", q.text},
          {"qualifiers", q.qualifiers},
          {"full_text", q.full_text()}};
}

inline nlohmann::json to_json(const Recommendation& rec) {
  nlohmann::json executed = nlohmann::json::array();
  for (const auto& q : rec.query.executed) executed.push_back(query_to_json(q));

  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : rec.ranked) {
    nlohmann::json applicable = nlohmann::json::array();
    for (auto comp : c.sims.applicable) applicable.push_back(similarity::to_string(comp));
    cands.push_back({
        {"final_rank", c.final_rank},
        {"search_rank", c.search_rank},
        {"issue", c.issue.ref.str()},
        {"title", c.issue.title},
        {"is_pull_request", c.issue.is_pull_request},
        {"score", c.score},
        {"metrics",
         {{"word_count", c.metrics.word_count},
          {"has_fix_commit", c.metrics.has_fix_commit},
          {"comment_count", c.metrics.comment_count},
          {"keyword_count", c.metrics.keyword_count}}},
        {"similarity",
         {{"code", c.sims.code},
          {"dependency", c.sims.dependency},
          {"permission", c.sims.permission},
          {"ui", c.sims.ui},
          {"applicable", applicable}}},
        {"factors", evalharness::factors_to_json(c.factors)},
        {"linked_patch_refs", c.issue.linked_patch_refs},
    });
  }
  return {{"driver", rec.driver.ref.str()},
          {"query", rec.query.executed.empty() ? nlohmann::json(nullptr) : query_to_json(rec.query.query)},
          {"queries_executed", executed},
          {"weights", rec.weights},
          {"candidates", cands}};
}

inline std::string render_table(const Recommendation& rec) {
  std::string out = fmt::format("driver: {}\n", rec.driver.ref.str());
  if (!rec.query.executed.empty())
    out += fmt::format("query ({}): {}\n", querygen::to_string(rec.query.query.strategy),
                       rec.query.query.full_text());
  out += fmt::format("{:>4} {:>6} {:>7} {:>6} {:>6} {:>6} {:>6}  {}\n", "rank", "search", "score", "code", "dep",
                     "perm", "ui", "issue");
  for (const auto& c : rec.ranked) {
    auto title = c.issue.title.size() > 60 ? c.issue.title.substr(0, 57) + "..." : c.issue.title;
    out += fmt::format("{:>4} {:>6} {:>7.4f} {:>6.3f} {:>6.3f} {:>6.3f} {:>6.3f}  {} {}\n", c.final_rank,
                       c.search_rank, c.score, c.sims.code, c.sims.dependency, c.sims.permission, c.sims.ui,
                       c.issue.ref.str(), title);
  }
  return out;
}

}  // namespace bugnav::cli
