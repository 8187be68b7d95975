#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bugnav/cli/run_config.hpp"
#include "bugnav/corpus/client.hpp"
#include "bugnav/extract/repo_context.hpp"
#include "bugnav/log.hpp"
#include "bugnav/parallel.hpp"
#include "bugnav/querygen/query_builder.hpp"
#include "bugnav/ranking/factors.hpp"
#include "bugnav/ranking/quality.hpp"
#include "bugnav/ranking/rank.hpp"
#include "bugnav/similarity/similarity_vector.hpp"

namespace bugnav::cli {

/// An issue on the platform, or one already loaded (e.g. from a local file).
using IssueInput = std::variant<corpus::IssueRef, corpus::IssueDocument>;

struct Recommendation {
  corpus::IssueDocument driver;
  querygen::QueryOutcome query;
  ranking::WeightConfig weights;
  std::vector<ranking::RankedCandidate> ranked;
};

namespace detail {

inline extract::RepoContext context_or_empty(corpus::PlatformClient& client, const corpus::RepoId& repo,
                                             const RunConfig& config) {
  try {
    return extract::build_repo_context(client.fetch_repo_snapshot(repo, config.snapshot_globs));
  } catch (const NotFoundError& e) {
    logger()->warn("repository {} unavailable ({}); treating it as empty", repo.str(), e.what());
    return {};
  }
}

}  // namespace detail

/// Query generation, search, then per-candidate analysis and re-ranking.
inline Recommendation recommend(const IssueInput& input, const RunConfig& config, corpus::PlatformClient& client) {
  config.validate();
  Recommendation rec;
  rec.weights = config.weights;
  rec.driver = std::holds_alternative<corpus::IssueRef>(input)
                   ? client.fetch_issue(std::get<corpus::IssueRef>(input))
                   : std::get<corpus::IssueDocument>(input);

  const corpus::SearchFilters filters{config.language, config.state, config.max_candidates};
  rec.query = querygen::build_query(
      rec.driver, [&](const querygen::SearchQuery& q) { return client.search_issues(q, filters); },
      {config.n_threshold, config.stack_trace_qualifier});

  // The driver is never its own navigator.
  std::vector<corpus::IssueHit> hits;
  for (const auto& h : rec.query.hits)
    if (h.issue.ref != rec.driver.ref) hits.push_back(h);
  if (hits.empty()) return rec;

  const auto driver_ctx = detail::context_or_empty(client, rec.driver.ref.repo_id(), config);

  std::vector<corpus::RepoId> repos;
  for (const auto& h : hits) {
    const auto r = h.issue.ref.repo_id();
    if (std::find(repos.begin(), repos.end(), r) == repos.end()) repos.push_back(r);
  }
  std::vector<extract::RepoContext> repo_ctx(repos.size());
  parallel_for(repos.size(), [&](std::size_t i) { repo_ctx[i] = detail::context_or_empty(client, repos[i], config); },
               config.parallelism);

  const similarity::GstOptions gst{config.min_match_len, config.abstract_identifiers};
  std::vector<ranking::Candidate> candidates(hits.size());
  parallel_for(
      hits.size(),
      [&](std::size_t i) {
        const auto& hit = hits[i];
        corpus::IssueDocument issue;
        try {
          issue = client.fetch_issue(hit.issue.ref);
        } catch (const NotFoundError&) {
          logger()->warn("candidate {} vanished; using its search record", hit.issue.ref.str());
          issue = hit.issue;
        }
        const auto patch = client.fetch_patch(issue);
        const auto repo_index = std::find(repos.begin(), repos.end(), issue.ref.repo_id()) - repos.begin();
        const auto& ctx = repo_ctx[static_cast<std::size_t>(repo_index)];

        auto& c = candidates[i];
        c.sims = similarity::similarity_vector({rec.driver, driver_ctx}, {issue, ctx}, patch, gst);
        c.metrics = ranking::quality_metrics(issue, config.keywords);
        c.factors = ranking::normalize_factors(c.metrics, c.sims, config.caps);
        c.search_rank = hit.search_rank;
        c.issue = std::move(issue);
      },
      config.parallelism);

  rec.ranked = ranking::rank(std::move(candidates), config.weights);
  return rec;
}

}  // namespace bugnav::cli
