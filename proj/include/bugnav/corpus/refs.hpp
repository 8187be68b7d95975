#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bugnav/corpus/types.hpp"

namespace bugnav::corpus {

// Patch references are kept as plain strings:
//   "owner/repo/pull/N"        pull request
//   "owner/repo/commit/SHA"    commit URL
//   "SHA"                      bare hash, resolved against the issue's own repository

struct ThreadLink {
  enum class Kind { issue, pull, commit };
  Kind kind;
  RepoId repo;
  std::string id;  // number or sha
  std::size_t position;
};

inline const std::regex& link_regex() {
  static const std::regex re(
      R"(https?://(?:www\.)?github\.com/([\w.-]+)/([\w.-]+)/(issues|pull|commit)/([0-9a-f]{7,40}|\d+)(?:/commits/([0-9a-f]{7,40}))?)");
  return re;
}

/// All platform links in `text`, in order of appearance.
inline std::vector<ThreadLink> find_links(const std::string& text) {
  std::vector<ThreadLink> out;
  for (std::sregex_iterator it(text.begin(), text.end(), link_regex()), end; it != end; ++it) {
    const auto& m = *it;
    ThreadLink link{ThreadLink::Kind::issue, {m[1], m[2]}, m[4], static_cast<std::size_t>(m.position(0))};
    if (m[3] == "pull") link.kind = ThreadLink::Kind::pull;
    if (m[3] == "commit") link.kind = ThreadLink::Kind::commit;
    if (m[5].matched) {
      link.kind = ThreadLink::Kind::commit;
      link.id = m[5];
    }
    if (link.kind != ThreadLink::Kind::commit && link.id.find_first_not_of("0123456789") != std::string::npos)
      continue;
    out.push_back(std::move(link));
  }
  return out;
}

/// Bare commit hashes: 7-40 lowercase hex chars bounded by non-word
/// characters, containing at least one digit and one letter. URLs are skipped.
struct BareHash {
  std::string sha;
  std::size_t position;
};

inline std::vector<BareHash> find_bare_hashes(const std::string& text) {
  static const std::regex url(R"(https?://\S+)");
  std::string stripped = text;
  for (std::sregex_iterator it(text.begin(), text.end(), url), end; it != end; ++it)
    std::fill_n(stripped.begin() + it->position(0), it->length(0), ' ');
  std::vector<BareHash> out;
  std::size_t i = 0;
  auto word = [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  while (i < stripped.size()) {
    if (!word(stripped[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < stripped.size() && word(stripped[j])) ++j;
    const std::string_view run(stripped.data() + i, j - i);
    if (run.size() >= 7 && run.size() <= 40 &&
        run.find_first_not_of("0123456789abcdef") == std::string_view::npos &&
        run.find_first_of("0123456789") != std::string_view::npos &&
        run.find_first_of("abcdef") != std::string_view::npos)
      out.push_back({std::string(run), i});
    i = j;
  }
  return out;
}

/// Ordered patch references for an issue: the issue itself when it is a
/// pull request, then PR links in the body, then everything else in thread order.
inline std::vector<std::string> extract_patch_refs(const IssueDocument& doc) {
  std::vector<std::string> refs;
  std::set<std::string> seen;
  auto add = [&](std::string r) {
    if (seen.insert(r).second) refs.push_back(std::move(r));
  };
  auto link_ref = [](const ThreadLink& l) {
    return l.repo.str() + (l.kind == ThreadLink::Kind::pull ? "/pull/" : "/commit/") + l.id;
  };

  if (doc.is_pull_request) add(doc.ref.repo_id().str() + "/pull/" + std::to_string(doc.ref.number));
  for (const auto& l : find_links(doc.body))
    if (l.kind == ThreadLink::Kind::pull) add(link_ref(l));

  std::vector<const std::string*> thread{&doc.body};
  for (const auto& c : doc.comments) thread.push_back(&c);
  for (const auto* text : thread) {
    std::vector<std::pair<std::size_t, std::string>> found;
    for (const auto& l : find_links(*text))
      if (l.kind != ThreadLink::Kind::issue) found.emplace_back(l.position, link_ref(l));
    for (auto& h : find_bare_hashes(*text)) found.emplace_back(h.position, std::move(h.sha));
    std::sort(found.begin(), found.end());
    for (auto& f : found) add(std::move(f.second));
  }
  return refs;
}

// Repository names are case-insensitive on the platform.
inline bool same_repo(const RepoId& a, const RepoId& b) {
  auto eq = [](const std::string& x, const std::string& y) {
    return std::equal(x.begin(), x.end(), y.begin(), y.end(),
                      [](char p, char q) { return std::tolower(static_cast<unsigned char>(p)) ==
                                                  std::tolower(static_cast<unsigned char>(q)); });
  };
  return eq(a.owner, b.owner) && eq(a.repo, b.repo);
}

/// First issue or PR link in the thread pointing at a different repository.
inline std::optional<IssueRef> first_cross_reference(const IssueDocument& doc) {
  std::vector<const std::string*> thread{&doc.body};
  for (const auto& c : doc.comments) thread.push_back(&c);
  for (const auto* text : thread) {
    for (const auto& l : find_links(*text)) {
      if (l.kind == ThreadLink::Kind::commit) continue;
      if (same_repo(l.repo, doc.ref.repo_id())) continue;
      return IssueRef(l.repo.owner, l.repo.repo, std::stoll(l.id));
    }
  }
  return std::nullopt;
}

}  // namespace bugnav::corpus
