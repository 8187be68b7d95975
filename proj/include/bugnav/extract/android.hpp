#pragma once

#include <set>
#include <string>

#include "bugnav/corpus/types.hpp"
#include "bugnav/extract/dependencies.hpp"
#include "bugnav/extract/xml.hpp"
#include "bugnav/textprep/tokenize.hpp"

namespace bugnav::extract {

inline bool is_manifest(const std::string& path) { return path_basename(path) == "AndroidManifest.xml"; }

inline bool is_layout(const std::string& path) {
  return path.ends_with(".xml") &&
         (path.starts_with("res/layout") || path.find("/res/layout") != std::string::npos);
}

inline bool is_android_project(const corpus::RepoSnapshot& snap) {
  for (const auto& [path, content] : snap.files)
    if (is_manifest(path)) return true;
  return false;
}

/// uses-permission names, lowercased, without the "android.permission." prefix.
inline std::set<std::string> extract_permissions(const corpus::RepoSnapshot& snap) {
  static const std::string prefix = "android.permission.";
  std::set<std::string> perms;
  for (const auto& [path, content] : snap.files) {
    if (!is_manifest(path)) continue;
    auto tree = parse_xml(path, content);
    if (!tree) continue;
    for_each_element(*tree, [&](const std::string& tag, const XmlTree& node) {
      if (tag != "uses-permission" && tag != "uses-permission-sdk-23") return;
      auto name = xml_attribute(node, "android:name");
      if (!name) return;
      auto p = textprep::to_lower(trim_ws(*name));
      if (p.starts_with(prefix)) p = p.substr(prefix.size());
      if (!p.empty()) perms.insert(p);
    });
  }
  return perms;
}

/// Widget tag names (last dotted segment) and android:id leaf names from layout files.
inline std::set<std::string> extract_ui_elements(const corpus::RepoSnapshot& snap) {
  static const std::set<std::string> structural = {"include", "merge", "requestFocus", "tag", "layout", "data",
                                                   "variable", "import"};
  std::set<std::string> ui;
  for (const auto& [path, content] : snap.files) {
    if (!is_layout(path)) continue;
    auto tree = parse_xml(path, content);
    if (!tree) continue;
    for_each_element(*tree, [&](const std::string& tag, const XmlTree& node) {
      if (structural.contains(tag)) return;
      const auto dot = tag.rfind('.');
      ui.insert(textprep::to_lower(dot == std::string::npos ? tag : tag.substr(dot + 1)));
      if (auto id = xml_attribute(node, "android:id")) {
        const auto slash = id->rfind('/');
        auto leaf = textprep::to_lower(slash == std::string::npos ? *id : id->substr(slash + 1));
        if (!leaf.empty()) ui.insert(leaf);
      }
    });
  }
  return ui;
}

}  // namespace bugnav::extract
