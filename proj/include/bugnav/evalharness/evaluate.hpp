#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "bugnav/evalharness/dataset.hpp"
#include "bugnav/evalharness/metrics.hpp"
#include "bugnav/parallel.hpp"
#include "bugnav/ranking/rank.hpp"

namespace bugnav::evalharness {

inline constexpr std::array<int, 3> kReportedK = {1, 3, 5};

struct SystemMetrics {
  std::map<int, double> prec_at;  // mean over queries
  double mrr = 0;
};

struct EvalReport {
  std::map<std::string, SystemMetrics> per_system;  // "raw_search", "reranked"
  int num_queries = 0;
  int num_relevant = 0;
};

/// Candidate refs in the ranking module's order.
inline std::vector<corpus::IssueRef> rerank(const EvalEntry& e, const ranking::WeightConfig& w) {
  std::vector<ranking::Candidate> cands;
  cands.reserve(e.candidates.size());
  for (const auto& c : e.candidates) {
    ranking::Candidate rc;
    rc.issue.ref = c.ref;
    rc.factors = c.factors;
    rc.search_rank = c.search_rank;
    cands.push_back(std::move(rc));
  }
  std::vector<corpus::IssueRef> out;
  for (const auto& r : ranking::rank(std::move(cands), w)) out.push_back(r.issue.ref);
  return out;
}

inline std::vector<corpus::IssueRef> raw_order(const EvalEntry& e) {
  std::vector<corpus::IssueRef> out;
  for (const auto& c : e.candidates) out.push_back(c.ref);
  return out;
}

inline SystemMetrics summarize(const std::vector<RankedQuery<corpus::IssueRef>>& queries) {
  SystemMetrics m;
  for (int k : kReportedK) {
    double sum = 0;
    for (const auto& q : queries) sum += precision_at_k(q.ranked, q.relevant, k);
    m.prec_at[k] = sum / static_cast<double>(queries.size());
  }
  m.mrr = mean_reciprocal_rank(queries);
  return m;
}

/// MRR of the re-ranked lists alone; the tuner's objective.
inline double reranked_mrr(const EvalDataset& d, const ranking::WeightConfig& w) {
  std::vector<RankedQuery<corpus::IssueRef>> q;
  q.reserve(d.entries.size());
  for (const auto& e : d.entries) q.push_back({rerank(e, w), e.relevant});
  return mean_reciprocal_rank(q);
}

inline EvalReport evaluate(const EvalDataset& d, const ranking::WeightConfig& w, unsigned threads = 1) {
  if (d.entries.empty()) throw ValidationError("dataset is empty");
  std::vector<RankedQuery<corpus::IssueRef>> raw(d.entries.size()), reranked(d.entries.size());
  parallel_for(
      d.entries.size(),
      [&](std::size_t i) {
        raw[i] = {raw_order(d.entries[i]), d.entries[i].relevant};
        reranked[i] = {rerank(d.entries[i], w), d.entries[i].relevant};
      },
      threads);
  EvalReport r;
  r.num_queries = static_cast<int>(d.entries.size());
  for (const auto& e : d.entries) r.num_relevant += static_cast<int>(e.relevant.size());
  r.per_system["raw_search"] = summarize(raw);
  r.per_system["reranked"] = summarize(reranked);
  return r;
}

inline nlohmann::json to_json(const EvalReport& r) {
  nlohmann::json systems = nlohmann::json::object();
  for (const auto& [name, m] : r.per_system) {
    nlohmann::json s = nlohmann::json::object();
    for (const auto& [k, v] : m.prec_at) s["prec@" + std::to_string(k)] = v;
    s["mrr"] = m.mrr;
    systems[name] = s;
  }
  return {{"num_queries", r.num_queries}, {"num_relevant", r.num_relevant}, {"systems", systems}};
}

inline std::string render_table(const EvalReport& r) {
  std::string out = fmt::format("{:<12}{:>9}{:>9}{:>9}{:>9}\n", "system", "Prec@1", "Prec@3", "Prec@5", "MRR");
  for (const char* name : {"raw_search", "reranked"}) {
    const auto it = r.per_system.find(name);
    if (it == r.per_system.end()) continue;
    const auto& m = it->second;
    out += fmt::format("{:<12}{:>9.4f}{:>9.4f}{:>9.4f}{:>9.4f}\n", name, m.prec_at.at(1), m.prec_at.at(3),
                       m.prec_at.at(5), m.mrr);
  }
  out += fmt::format("queries: {}, relevant labels: {}\n", r.num_queries, r.num_relevant);
  return out;
}

}  // namespace bugnav::evalharness
