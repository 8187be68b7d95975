#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bugnav/corpus/client.hpp"
#include "bugnav/corpus/refs.hpp"

namespace bugnav::corpus {

struct SimilarPair {
  IssueRef driver;
  IssueRef navigator;
  auto operator<=>(const SimilarPair&) const = default;
};

struct MinerOptions {
  std::string language = "java";
  std::string state;  // empty: open and closed
};

/// Searches each keyword as a phrase and pairs every matching issue with the
/// first issue or PR it links to in a different repository. Candidate pairs
/// only; no judgement of whether the link really describes a similar bug.
inline std::vector<SimilarPair> mine_similar_pairs(PlatformClient& client, const std::vector<std::string>& keywords,
                                                   int per_keyword_cap, const MinerOptions& opts = {}) {
  if (per_keyword_cap < 1 || per_keyword_cap > kPlatformSearchCap)
    throw ValidationError("per_keyword_cap must be within 1..1000");
  std::vector<SimilarPair> pairs;
  std::set<SimilarPair> seen;
  for (const auto& kw : keywords) {
    querygen::SearchQuery q{"\"" + kw + "\"", {"in:body,comments"}, querygen::Strategy::keyword};
    const auto hits = client.search_issues(q, {opts.language, opts.state, per_keyword_cap});
    for (const auto& hit : hits) {
      IssueDocument full;
      try {
        full = client.fetch_issue(hit.issue.ref);
      } catch (const NotFoundError&) {
        logger()->warn("issue {} disappeared; skipping", hit.issue.ref.str());
        continue;
      }
      auto target = first_cross_reference(full);
      if (!target) continue;
      SimilarPair p{full.ref, *target};
      if (seen.insert(p).second) pairs.push_back(std::move(p));
    }
  }
  return pairs;
}

}  // namespace bugnav::corpus
