#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace bugnav::querygen {

struct StackTraceInfo {
  std::string top_exception;  // as written, usually fully qualified
  std::string top_message;
  std::string root_exception;
  std::string root_message;
  std::vector<std::string> frames;
  bool complete = false;  // at least one "at ..." frame was present
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct ExceptionMention {
  std::string name;
  std::string message;
};

// Finds the first exception/error type mentioned in `line`. A bare
// "Exception" or "Error" word only counts when followed by ':'.
inline std::optional<ExceptionMention> find_exception(const std::string& line) {
  static const std::regex re(R"((?:^|[^\w$])\.*((?:[A-Za-z_$][\w$]*\.)*[\w$]*(?:Exception|Error))(?![\w$]))");
  auto begin = line.cbegin();
  std::smatch m;
  while (std::regex_search(begin, line.cend(), m, re)) {
    const std::string name = m[1];
    const auto after = m[1].second;
    auto next = after;
    while (next != line.cend() && (*next == ' ' || *next == '\t')) ++next;
    const bool colon = next != line.cend() && *next == ':';
    const bool qualified = name.find('.') != std::string::npos;
    const bool compound = name != "Exception" && name != "Error";
    if (qualified || colon || compound) {
      ExceptionMention em{name, {}};
      if (colon) em.message = trim(std::string(next + 1, line.cend()));
      return em;
    }
    begin = after;
  }
  return std::nullopt;
}

}  // namespace detail

/// Locates a Java-style stack trace in free text. The root cause is the
/// exception of the last "Caused by:" block; without one (e.g. a partial
/// trace) the first exception of the trace stands in for it.
inline std::optional<StackTraceInfo> parse_stack_trace(const std::string& body) {
  static const std::regex frame_re(R"(^\s*at\s+[\w$.<>/]+\()");
  std::istringstream in(body);
  std::string line;
  std::optional<StackTraceInfo> info;
  std::optional<detail::ExceptionMention> cause;
  while (std::getline(in, line)) {
    if (!info) {
      if (auto em = detail::find_exception(line)) {
        info.emplace();
        info->top_exception = em->name;
        info->top_message = em->message;
      }
      continue;
    }
    if (std::regex_search(line, frame_re)) {
      info->frames.push_back(detail::trim(line));
      continue;
    }
    if (auto pos = line.find("Caused by:"); pos != std::string::npos) {
      if (auto em = detail::find_exception(line.substr(pos + 10))) cause = em;
    }
  }
  if (!info) return std::nullopt;
  info->root_exception = cause ? cause->name : info->top_exception;
  info->root_message = cause ? cause->message : info->top_message;
  info->complete = !info->frames.empty();
  return info;
}

inline std::string simple_name(const std::string& qualified) {
  const auto dot = qualified.rfind('.');
  return dot == std::string::npos ? qualified : qualified.substr(dot + 1);
}

/// Rewrites an exception message into search terms: numeric tails such as
/// ": 93067 bytes" are dropped, punctuation (quotes, parentheses, colons,
/// '.', '$', ...) becomes whitespace, and a capitalized first word is lowercased.
inline std::string normalize_message(const std::string& message) {
  static const std::regex numeric_tail(R"(\s*:\s*[-+]?\d[\d,.]*(?:\s+[A-Za-z]+)?\s*$)");
  std::string s = std::regex_replace(message, numeric_tail, "");
  for (auto& c : s) {
    const auto u = static_cast<unsigned char>(c);
    const bool keep = std::isalnum(u) || c == '_' || c == '-' || u >= 0x80;
    if (!keep) c = ' ';
  }
  std::istringstream words(s);
  std::string out, w;
  bool first = true;
  while (words >> w) {
    if (first) {
      const bool capitalized = std::isupper(static_cast<unsigned char>(w[0])) &&
                               std::none_of(w.begin() + 1, w.end(), [](char c) {
                                 return std::isupper(static_cast<unsigned char>(c)) ||
                                        std::isdigit(static_cast<unsigned char>(c));
                               });
      if (capitalized) w[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(w[0])));
      first = false;
    } else {
      out += ' ';
    }
    out += w;
  }
  return out;
}

}  // namespace bugnav::querygen
