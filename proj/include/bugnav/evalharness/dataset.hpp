#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bugnav/corpus/json.hpp"
#include "bugnav/corpus/types.hpp"
#include "bugnav/error.hpp"
#include "bugnav/ranking/factors.hpp"

namespace bugnav::evalharness {

struct EvalCandidate {
  corpus::IssueRef ref;
  int search_rank = 0;
  ranking::FactorVector factors;
};

struct EvalEntry {
  corpus::IssueRef driver;
  std::vector<EvalCandidate> candidates;  // platform order
  std::set<corpus::IssueRef> relevant;
};

struct EvalDataset {
  std::vector<EvalEntry> entries;
};

inline nlohmann::json factors_to_json(const ranking::FactorVector& f) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < ranking::kNumFactors; ++i) j[std::string(ranking::kFactorNames[i])] = f.values[i];
  return j;
}

inline ranking::FactorVector factors_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("factors must be an object");
  ranking::FactorVector f;
  for (const auto& [key, value] : j.items()) {
    const auto factor = ranking::factor_from_name(key);
    if (!factor) throw ValidationError("unknown factor: " + key);
    const double v = value.get<double>();
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("factor out of [0,1]: " + key);
    f[*factor] = v;
  }
  return f;
}

inline nlohmann::json to_json(const EvalEntry& e) {
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : e.candidates)
    cands.push_back({{"ref", c.ref.str()}, {"search_rank", c.search_rank}, {"factors", factors_to_json(c.factors)}});
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& r : e.relevant) rel.push_back(r.str());
  return {{"driver", e.driver.str()}, {"candidates", cands}, {"relevant", rel}};
}

inline EvalEntry entry_from_json(const nlohmann::json& j) {
  EvalEntry e;
  e.driver = corpus::IssueRef::parse(j.at("driver").get<std::string>());
  std::set<corpus::IssueRef> refs;
  std::set<int> ranks;
  for (const auto& c : j.at("candidates")) {
    EvalCandidate ec{corpus::IssueRef::parse(c.at("ref").get<std::string>()), c.at("search_rank").get<int>(),
                     factors_from_json(c.value("factors", nlohmann::json::object()))};
    if (ec.search_rank < 1 || !ranks.insert(ec.search_rank).second)
      throw ValidationError("duplicate or non-positive search_rank for " + e.driver.str());
    if (!refs.insert(ec.ref).second) throw ValidationError("duplicate candidate " + ec.ref.str());
    e.candidates.push_back(std::move(ec));
  }
  std::sort(e.candidates.begin(), e.candidates.end(),
            [](const EvalCandidate& a, const EvalCandidate& b) { return a.search_rank < b.search_rank; });
  for (const auto& r : j.value("relevant", nlohmann::json::array())) {
    auto ref = corpus::IssueRef::parse(r.get<std::string>());
    if (!refs.contains(ref)) throw ValidationError("relevant issue " + ref.str() + " is not a candidate");
    e.relevant.insert(std::move(ref));
  }
  return e;
}

/// One JSON object per line; blank lines are skipped.
inline EvalDataset parse_dataset(std::istream& in) {
  EvalDataset d;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      d.entries.push_back(entry_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& ex) {
      throw ValidationError("dataset line " + std::to_string(lineno) + ": " + ex.what());
    } catch (const ValidationError& ex) {
      throw ValidationError("dataset line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return d;
}

inline EvalDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open dataset " + path.string());
  return parse_dataset(in);
}

inline void write_dataset(std::ostream& out, const EvalDataset& d) {
  for (const auto& e : d.entries) out << to_json(e).dump() << '\n';
}

}  // namespace bugnav::evalharness
