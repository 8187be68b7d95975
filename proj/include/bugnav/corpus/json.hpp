#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "bugnav/corpus/refs.hpp"
#include "bugnav/corpus/types.hpp"

namespace bugnav::corpus {

inline std::string string_or_empty(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  return (it == j.end() || !it->is_string()) ? std::string{} : it->get<std::string>();
}

/// Builds a document from a platform issue payload (search item or issue
/// endpoint). Comments are not part of these payloads; only their count is.
inline IssueDocument issue_from_json(const nlohmann::json& j) {
  IssueDocument doc;
  const auto repo_url = string_or_empty(j, "repository_url");
  const auto slash = repo_url.rfind('/');
  const auto prev = slash == std::string::npos || slash == 0 ? std::string::npos : repo_url.rfind('/', slash - 1);
  if (prev == std::string::npos) throw TransportError("issue payload lacks repository_url");
  doc.ref = IssueRef(repo_url.substr(prev + 1, slash - prev - 1), repo_url.substr(slash + 1),
                     j.at("number").get<std::int64_t>());
  doc.title = string_or_empty(j, "title");
  doc.body = string_or_empty(j, "body");
  doc.state = string_or_empty(j, "state") == "closed" ? IssueState::closed : IssueState::open;
  doc.num_comments = j.value("comments", 0);
  if (auto it = j.find("labels"); it != j.end() && it->is_array())
    for (const auto& l : *it) doc.labels.push_back(l.is_string() ? l.get<std::string>() : string_or_empty(l, "name"));
  doc.is_pull_request = j.contains("pull_request") && !j["pull_request"].is_null();
  doc.linked_patch_refs = extract_patch_refs(doc);
  return doc;
}

inline void to_json(nlohmann::json& j, const IssueRef& r) { j = r.str(); }
inline void from_json(const nlohmann::json& j, IssueRef& r) { r = IssueRef::parse(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, const RepoId& r) { j = r.str(); }
inline void from_json(const nlohmann::json& j, RepoId& r) {
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw ValidationError("malformed repository id: " + s);
  r = {s.substr(0, slash), s.substr(slash + 1)};
}

inline void to_json(nlohmann::json& j, const IssueDocument& d) {
  j = {{"ref", d.ref},
       {"title", d.title},
       {"body", d.body},
       {"comments", d.comments},
       {"state", d.state == IssueState::closed ? "closed" : "open"},
       {"num_comments", d.num_comments},
       {"labels", d.labels},
       {"linked_patch_refs", d.linked_patch_refs},
       {"project_language", d.project_language},
       {"is_pull_request", d.is_pull_request}};
}

/// Reads a local issue file. linked_patch_refs is derived when absent.
inline void from_json(const nlohmann::json& j, IssueDocument& d) {
  d.ref = j.at("ref").get<IssueRef>();
  d.title = j.value("title", "");
  d.body = j.value("body", "");
  d.comments = j.value("comments", std::vector<std::string>{});
  d.state = j.value("state", "open") == "closed" ? IssueState::closed : IssueState::open;
  d.num_comments = j.value("num_comments", static_cast<std::int64_t>(d.comments.size()));
  d.labels = j.value("labels", std::vector<std::string>{});
  d.project_language = j.value("project_language", "");
  d.is_pull_request = j.value("is_pull_request", false);
  d.comments_fetched = true;
  if (j.contains("linked_patch_refs"))
    d.linked_patch_refs = j["linked_patch_refs"].get<std::vector<std::string>>();
  else
    d.linked_patch_refs = extract_patch_refs(d);
}

inline void to_json(nlohmann::json& j, const RepoSnapshot& s) {
  j = {{"repo", s.repo}, {"head_commit", s.head_commit}, {"files", s.files}, {"fetched_at", s.fetched_at}};
}

inline void from_json(const nlohmann::json& j, RepoSnapshot& s) {
  s.repo = j.at("repo").get<RepoId>();
  s.head_commit = j.at("head_commit").get<std::string>();
  s.files = j.at("files").get<std::map<std::string, std::string>>();
  s.fetched_at = j.value("fetched_at", "");
}

}  // namespace bugnav::corpus
