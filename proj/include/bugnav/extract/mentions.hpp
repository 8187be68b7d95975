#pragma once

#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "bugnav/corpus/types.hpp"
#include "bugnav/textprep/tokenize.hpp"

namespace bugnav::extract {

/// Stemmed token stream of an issue's title, body, and comments.
inline std::vector<std::string> issue_stems(const corpus::IssueDocument& issue) {
  std::string text = issue.title + "\n" + issue.body;
  for (const auto& c : issue.comments) text += "\n" + c;
  return textprep::stem_all(textprep::tokenize(text)).tokens;
}

/// Vocabulary entries the issue mentions. For "group:artifact" entries only
/// the artifact is considered. An entry's name is split on punctuation
/// ("snowball-stemmer" -> snowball, stemmer) and matches when either its
/// parts appear consecutively in the issue, or the parts glued together
/// match a single issue token ("SnowballStemmer"). Comparison is on stems.
inline std::set<std::string> extract_mentions(const corpus::IssueDocument& issue,
                                              const std::set<std::string>& vocabulary) {
  std::set<std::string> found;
  if (vocabulary.empty()) return found;
  const auto stems = issue_stems(issue);
  const std::unordered_set<std::string> stem_set(stems.begin(), stems.end());

  for (const auto& entry : vocabulary) {
    const auto colon = entry.rfind(':');
    const auto name = colon == std::string::npos ? entry : entry.substr(colon + 1);
    const auto parts = textprep::tokenize(name).tokens;
    if (parts.empty()) continue;

    std::string glued;
    for (const auto& p : parts) glued += p;
    if (stem_set.contains(textprep::stem(glued))) {
      found.insert(entry);
      continue;
    }
    if (parts.size() < 2) continue;
    std::vector<std::string> part_stems;
    for (const auto& p : parts) part_stems.push_back(textprep::stem(p));
    for (std::size_t i = 0; i + part_stems.size() <= stems.size(); ++i) {
      if (std::equal(part_stems.begin(), part_stems.end(), stems.begin() + static_cast<std::ptrdiff_t>(i))) {
        found.insert(entry);
        break;
      }
    }
  }
  return found;
}

}  // namespace bugnav::extract
