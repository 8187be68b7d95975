#pragma once

#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace bugnav::corpus {

// Translates a path glob to a regex. Supports '*', '?', and '**' (any
// number of directories, including none when written as "**/").
inline std::regex glob_to_regex(std::string_view glob) {
  std::string rx = "^";
  for (std::size_t i = 0; i < glob.size(); ++i) {
    const char c = glob[i];
    if (c == '*') {
      if (i + 1 < glob.size() && glob[i + 1] == '*') {
        const bool dir = i + 2 < glob.size() && glob[i + 2] == '/';
        rx += dir ? "(?:.*/)?" : ".*";
        i += dir ? 2 : 1;
      } else {
        rx += "[^/]*";
      }
    } else if (c == '?') {
      rx += "[^/]";
    } else if (std::string_view(".^$|()[]{}+\\").find(c) != std::string_view::npos) {
      rx += '\\';
      rx += c;
    } else {
      rx += c;
    }
  }
  rx += '$';
  return std::regex(rx);
}

class GlobSet {
 public:
  explicit GlobSet(const std::vector<std::string>& globs) {
    for (const auto& g : globs) patterns_.push_back(glob_to_regex(g));
  }

  [[nodiscard]] bool matches(const std::string& path) const {
    for (const auto& p : patterns_)
      if (std::regex_match(path, p)) return true;
    return false;
  }

 private:
  std::vector<std::regex> patterns_;
};

inline std::vector<std::string> default_snapshot_globs() {
  return {"**/*.java", "**/*.kt", "**/pom.xml", "**/build.gradle*", "**/AndroidManifest.xml",
          "**/res/layout/**/*.xml"};
}

}  // namespace bugnav::corpus
