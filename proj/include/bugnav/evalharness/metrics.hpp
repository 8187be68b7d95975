#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "bugnav/error.hpp"

namespace bugnav::evalharness {

/// Eq. 7. An empty result list scores 1; a short list still divides by k.
template <typename T>
double precision_at_k(const std::vector<T>& ranked, const std::set<T>& relevant, int k) {
  if (k < 1) throw ValidationError("k must be >= 1");
  if (ranked.empty()) return 1.0;
  std::size_t hits = 0;
  const auto top = std::min(ranked.size(), static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < top; ++i)
    if (relevant.contains(ranked[i])) ++hits;
  return static_cast<double>(hits) / static_cast<double>(k);
}

/// 1-based position of the first relevant item.
template <typename T>
std::optional<std::size_t> first_relevant(const std::vector<T>& ranked, const std::set<T>& relevant) {
  for (std::size_t i = 0; i < ranked.size(); ++i)
    if (relevant.contains(ranked[i])) return i + 1;
  return std::nullopt;
}

template <typename T>
struct RankedQuery {
  std::vector<T> ranked;
  std::set<T> relevant;
};

/// Eq. 8. Queries without any relevant result contribute 0.
template <typename T>
double mean_reciprocal_rank(const std::vector<RankedQuery<T>>& queries) {
  if (queries.empty()) throw ValidationError("MRR needs at least one query");
  double sum = 0.0;
  for (const auto& q : queries)
    if (auto first = first_relevant(q.ranked, q.relevant)) sum += 1.0 / static_cast<double>(*first);
  return sum / static_cast<double>(queries.size());
}

}  // namespace bugnav::evalharness
