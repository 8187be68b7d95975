#pragma once

#include <regex>
#include <set>
#include <sstream>
#include <string>

#include "bugnav/corpus/types.hpp"
#include "bugnav/extract/xml.hpp"
#include "bugnav/textprep/tokenize.hpp"

namespace bugnav::extract {

struct DependencyId {
  std::string group;  // may be empty for short notations
  std::string artifact;

  DependencyId(std::string g, std::string a)
      : group(textprep::to_lower(g)), artifact(textprep::to_lower(a)) {}

  [[nodiscard]] std::string canonical() const { return group + ":" + artifact; }
  auto operator<=>(const DependencyId&) const = default;
};

inline std::string path_basename(const std::string& path) {
  const auto slash = path.rfind('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

inline std::string trim_ws(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

/// (groupId, artifactId) of every <dependency> element in a POM.
inline void parse_pom(const std::string& path, const std::string& content, std::set<DependencyId>& out) {
  auto tree = parse_xml(path, content);
  if (!tree) return;
  for_each_element(*tree, [&](const std::string& tag, const XmlTree& node) {
    if (tag != "dependency") return;
    const auto artifact = trim_ws(node.get("artifactId", ""));
    if (artifact.empty()) return;
    out.emplace(trim_ws(node.get("groupId", "")), artifact);
  });
}

/// Line-based scan of Gradle (Groovy or Kotlin DSL) dependency notations:
///   implementation 'g:a:v'     implementation("g:a:v")
///   compile group: 'g', name: 'a', version: 'v'
///   implementation 'a'          (short form, empty group)
inline void parse_gradle(const std::string& content, std::set<DependencyId>& out) {
  static const std::regex string_form(
      R"(^\s*[A-Za-z][\w]*\s*\(?\s*(?:platform\s*\(\s*)?['"]([^'":\s$]+):([^'":\s$]+)(?::[^'"\s]*)?['"])");
  static const std::regex map_form(
      R"(group\s*[:=]\s*['"]([^'"]+)['"]\s*,\s*(?:module|name)\s*[:=]\s*['"]([^'"]+)['"])");
  static const std::regex short_form(
      R"(^\s*(?:implementation|api|compile|compileOnly|runtimeOnly|testImplementation|androidTestImplementation|kapt|annotationProcessor)\s*\(?\s*['"]([A-Za-z][\w.-]*)['"]\s*\)?\s*$)");
  std::istringstream in(content);
  std::string line;
  bool in_block_comment = false;
  while (std::getline(in, line)) {
    if (in_block_comment) {
      auto end = line.find("*/");
      if (end == std::string::npos) continue;
      line = line.substr(end + 2);
      in_block_comment = false;
    }
    if (auto start = line.find("/*"); start != std::string::npos && line.find("*/", start) == std::string::npos) {
      line = line.substr(0, start);
      in_block_comment = true;
    }
    if (auto c = line.find("//"); c != std::string::npos && (c == 0 || line[c - 1] != ':')) line = line.substr(0, c);
    std::smatch m;
    if (std::regex_search(line, m, string_form))
      out.emplace(m[1], m[2]);
    else if (std::regex_search(line, m, map_form))
      out.emplace(m[1], m[2]);
    else if (std::regex_search(line, m, short_form))
      out.emplace("", m[1]);
  }
}

/// Union of dependencies declared in every pom.xml and build.gradle(.kts) file.
inline std::set<DependencyId> extract_dependencies(const corpus::RepoSnapshot& snap) {
  std::set<DependencyId> deps;
  for (const auto& [path, content] : snap.files) {
    const auto base = path_basename(path);
    if (base == "pom.xml")
      parse_pom(path, content, deps);
    else if (base == "build.gradle" || base == "build.gradle.kts")
      parse_gradle(content, deps);
  }
  return deps;
}

}  // namespace bugnav::extract
