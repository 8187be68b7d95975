#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bugnav/corpus/types.hpp"
#include "bugnav/textprep/porter_stemmer.hpp"
#include "bugnav/textprep/tokenize.hpp"

namespace bugnav::ranking {

struct QualityMetrics {
  long word_count = 0;
  bool has_fix_commit = false;
  long comment_count = 0;
  long keyword_count = 0;
  bool operator==(const QualityMetrics&) const = default;
};

inline const std::vector<std::string>& default_descriptive_keywords() {
  static const std::vector<std::string> kw = {"reproduce", "defect",   "crash", "error", "exception",
                                              "expected",  "actual",   "steps", "fix"};
  return kw;
}

inline long whitespace_word_count(const std::string& text) {
  std::istringstream in(text);
  long n = 0;
  for (std::string w; in >> w;) ++n;
  return n;
}

/// Keywords match on stems, so "crashes" counts toward "crash".
inline long count_keywords(const corpus::IssueDocument& issue, const std::vector<std::string>& keywords) {
  std::set<std::string> wanted;
  for (const auto& k : keywords) wanted.insert(textprep::stem(textprep::to_lower(k)));
  long n = 0;
  auto scan = [&](const std::string& text) {
    for (const auto& tok : textprep::tokenize(text).tokens)
      if (wanted.contains(textprep::stem(tok))) ++n;
  };
  scan(issue.body);
  for (const auto& c : issue.comments) scan(c);
  return n;
}

inline QualityMetrics quality_metrics(const corpus::IssueDocument& issue,
                                      const std::vector<std::string>& keywords = default_descriptive_keywords()) {
  QualityMetrics m;
  m.word_count = whitespace_word_count(issue.body);
  m.has_fix_commit = !issue.linked_patch_refs.empty();
  m.comment_count = issue.num_comments;
  m.keyword_count = count_keywords(issue, keywords);
  return m;
}

}  // namespace bugnav::ranking
