#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "bugnav/corpus/types.hpp"
#include "bugnav/error.hpp"
#include "bugnav/ranking/weights.hpp"

namespace bugnav::ranking {

struct Candidate {
  corpus::IssueDocument issue;
  QualityMetrics metrics;
  similarity::SimilarityVector sims;
  FactorVector factors;
  int search_rank = 0;
};

struct RankedCandidate {
  corpus::IssueDocument issue;
  QualityMetrics metrics;
  similarity::SimilarityVector sims;
  FactorVector factors;
  double score = 0;
  int search_rank = 0;
  int final_rank = 0;
};

/// Orders by score, highest first; equal scores keep platform order.
inline std::vector<RankedCandidate> rank(std::vector<Candidate> candidates, const WeightConfig& weights) {
  weights.validate();
  std::set<int> seen;
  for (const auto& c : candidates)
    if (c.search_rank < 1 || !seen.insert(c.search_rank).second)
      throw ValidationError("candidates need distinct positive search ranks");

  std::vector<RankedCandidate> out;
  out.reserve(candidates.size());
  for (auto& c : candidates)
    out.push_back({std::move(c.issue), c.metrics, std::move(c.sims), c.factors, score(c.factors, weights),
                   c.search_rank, 0});
  std::sort(out.begin(), out.end(), [](const RankedCandidate& a, const RankedCandidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.search_rank < b.search_rank;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].final_rank = static_cast<int>(i + 1);
  return out;
}

}  // namespace bugnav::ranking
