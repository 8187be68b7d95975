#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bugnav::querygen {

// Platform limit on the length of a search query.
inline constexpr std::size_t kMaxQueryLength = 256;

enum class Strategy { stack_trace, condition, summary_title_scoped, summary_unscoped, keyword };

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::stack_trace: return "stack_trace";
    case Strategy::condition: return "condition";
    case Strategy::summary_title_scoped: return "summary_title_scoped";
    case Strategy::summary_unscoped: return "summary_unscoped";
    case Strategy::keyword: return "keyword";
  }
  return "unknown";
}

struct SearchQuery {
  std::string text;
  std::vector<std::string> qualifiers;  // e.g. "in:title", "in:body,comments"
  Strategy strategy = Strategy::summary_unscoped;

  /// Text followed by the qualifiers, space separated; this is what counts against the limit.
  [[nodiscard]] std::string full_text() const {
    std::string out = text;
    for (const auto& q : qualifiers) out += " " + q;
    return out;
  }
};

}  // namespace bugnav::querygen
