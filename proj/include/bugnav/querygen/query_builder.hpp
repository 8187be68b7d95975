#pragma once

#include <functional>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "bugnav/corpus/types.hpp"
#include "bugnav/error.hpp"
#include "bugnav/querygen/search_query.hpp"
#include "bugnav/querygen/stack_trace.hpp"
#include "bugnav/textprep/tokenize.hpp"

namespace bugnav::querygen {

/// Phrase after the first whole-word if/when/while (any case), trimmed.
inline std::optional<std::string> extract_condition(const std::string& title) {
  static const std::regex re(R"(\b(if|when|while)\b)", std::regex::icase);
  std::smatch m;
  if (!std::regex_search(title, m, re)) return std::nullopt;
  auto rest = detail::trim(m.suffix().str());
  if (rest.empty()) return std::nullopt;
  return rest;
}

/// Title with symbols, stopwords, and the project's owner/repo name tokens
/// removed; surface casing is kept.
inline std::string summarize_title(const std::string& title, const corpus::IssueRef& project) {
  if (detail::trim(title).empty()) throw ValidationError("issue title is empty");
  std::set<std::string> project_tokens;
  for (const auto* name : {&project.owner, &project.repo})
    for (auto& t : textprep::tokenize(*name).tokens) project_tokens.insert(t);
  std::vector<std::string> kept;
  for (auto& w : textprep::split_words(title)) {
    const auto lower = textprep::to_lower(w);
    if (textprep::is_stopword(lower) || project_tokens.contains(lower)) continue;
    kept.push_back(std::move(w));
  }
  if (kept.empty()) throw ValidationError("title has no usable query terms: " + title);
  return textprep::join(kept);
}

/// Stack-trace query text: simple exception name followed by the normalized message.
inline std::string exception_query_text(const StackTraceInfo& info) {
  auto text = simple_name(info.root_exception);
  const auto msg = normalize_message(info.root_message);
  if (!msg.empty()) text += " " + msg;
  return text;
}

/// Cuts `text` so that text plus qualifiers fits the length limit,
/// only at whitespace. May return an empty string.
inline std::string fit_to_budget(const std::string& text, const std::vector<std::string>& qualifiers) {
  std::size_t reserved = 0;
  for (const auto& q : qualifiers) reserved += q.size() + 1;
  if (reserved >= kMaxQueryLength) return {};
  const auto budget = kMaxQueryLength - reserved;
  if (text.size() <= budget) return text;
  const auto cut = text.rfind(' ', budget);
  if (cut == std::string::npos) return {};
  return detail::trim(text.substr(0, cut));
}

struct QueryOptions {
  int n_threshold = 5;
  // Qualifier for stack-trace queries; "in:body" is the narrower alternative.
  std::string stack_trace_qualifier = "in:body,comments";
};

struct QueryOutcome {
  SearchQuery query;                   // the last query executed
  std::vector<corpus::IssueHit> hits;  // its results
  std::vector<SearchQuery> executed;   // every query run, in order
};

using SearchFn = std::function<std::vector<corpus::IssueHit>(const SearchQuery&)>;

/// Runs the query ladder: stack trace, then the title condition, then the
/// title summary scoped to titles, then the summary unscoped. A later rung
/// only runs while the current results number fewer than n_threshold.
inline QueryOutcome build_query(const corpus::IssueDocument& issue, const SearchFn& search,
                                const QueryOptions& opts = {}) {
  if (opts.n_threshold < 1) throw ValidationError("n_threshold must be positive");
  QueryOutcome out;
  std::vector<std::string> attempted;
  bool ran = false;

  auto run = [&](std::string text, std::vector<std::string> qualifiers, Strategy strategy) {
    attempted.emplace_back(to_string(strategy));
    text = fit_to_budget(text, qualifiers);
    if (text.empty()) return false;
    SearchQuery q{std::move(text), std::move(qualifiers), strategy};
    out.hits = search(q);
    out.query = q;
    out.executed.push_back(std::move(q));
    ran = true;
    return true;
  };
  auto too_few = [&] { return static_cast<int>(out.hits.size()) < opts.n_threshold; };

  if (auto trace = parse_stack_trace(issue.body))
    run(exception_query_text(*trace), {opts.stack_trace_qualifier}, Strategy::stack_trace);

  if (too_few()) {
    if (auto cond = extract_condition(issue.title)) {
      run(*cond, {"in:title"}, Strategy::condition);
    } else {
      std::optional<std::string> summary;
      try {
        summary = summarize_title(issue.title, issue.ref);
      } catch (const ValidationError&) {
        attempted.emplace_back(to_string(Strategy::summary_title_scoped));
      }
      if (summary && run(*summary, {"in:title"}, Strategy::summary_title_scoped) && too_few())
        run(*summary, {}, Strategy::summary_unscoped);
    }
  }

  if (!ran) throw NoQueryError("no query could be built for " + issue.ref.str(), attempted);
  return out;
}

}  // namespace bugnav::querygen
