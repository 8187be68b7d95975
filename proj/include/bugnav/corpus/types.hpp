#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "bugnav/error.hpp"

namespace bugnav::corpus {

/// owner/repo pair identifying one project on the platform.
struct RepoId {
  std::string owner;
  std::string repo;

  [[nodiscard]] std::string str() const { return owner + "/" + repo; }
  auto operator<=>(const RepoId&) const = default;
};

struct IssueRef {
  std::string owner;
  std::string repo;
  std::int64_t number = 0;

  IssueRef() = default;
  IssueRef(std::string o, std::string r, std::int64_t n)
      : owner(std::move(o)), repo(std::move(r)), number(n) {
    if (owner.empty() || repo.empty()) throw ValidationError("issue ref needs owner and repo");
    if (number < 1) throw ValidationError("issue number must be >= 1");
  }

  /// Parses "owner/repo#123".
  static IssueRef parse(const std::string& text) {
    static const std::regex re(R"(^([\w.-]+)/([\w.-]+)#(\d+)$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw ValidationError("malformed issue ref: " + text);
    return IssueRef(m[1], m[2], std::stoll(m[3]));
  }

  [[nodiscard]] RepoId repo_id() const { return {owner, repo}; }
  [[nodiscard]] std::string str() const { return owner + "/" + repo + "#" + std::to_string(number); }
  auto operator<=>(const IssueRef&) const = default;
};

enum class IssueState { open, closed };

struct IssueDocument {
  IssueRef ref;
  std::string title;
  std::string body;
  std::vector<std::string> comments;
  IssueState state = IssueState::open;
  std::int64_t num_comments = 0;
  std::vector<std::string> labels;
  std::vector<std::string> linked_patch_refs;
  std::string project_language;
  // Set when the document is itself a pull request.
  bool is_pull_request = false;
  // False for search-result stubs whose comments were not downloaded.
  bool comments_fetched = false;
};

struct ModifiedFile {
  std::string path;
  std::string new_content;
  std::string diff_hunks;
};

struct Patch {
  std::string source_ref;
  std::vector<ModifiedFile> modified_files;
};

struct RepoSnapshot {
  RepoId repo;
  std::string head_commit;
  std::map<std::string, std::string> files;
  std::string fetched_at;

  bool operator==(const RepoSnapshot&) const = default;
};

struct IssueHit {
  IssueDocument issue;
  int search_rank = 0;
};

}  // namespace bugnav::corpus
