#pragma once

#include <map>
#include <set>
#include <string>

#include "bugnav/corpus/types.hpp"
#include "bugnav/extract/android.hpp"
#include "bugnav/extract/code_lexer.hpp"
#include "bugnav/extract/dependencies.hpp"

namespace bugnav::extract {

inline bool is_source_file(const std::string& path) { return path.ends_with(".java") || path.ends_with(".kt"); }

/// Comparable artifacts of one repository.
struct RepoContext {
  std::set<DependencyId> dependencies;
  std::set<std::string> permissions;
  std::set<std::string> ui_elements;
  std::map<std::string, CodeTokenStream> code_files;
  bool android = false;  // an AndroidManifest.xml is present

  [[nodiscard]] std::set<std::string> dependency_names() const {
    std::set<std::string> out;
    for (const auto& d : dependencies) out.insert(d.canonical());
    return out;
  }
};

inline RepoContext build_repo_context(const corpus::RepoSnapshot& snap) {
  RepoContext ctx;
  ctx.dependencies = extract_dependencies(snap);
  ctx.permissions = extract_permissions(snap);
  ctx.ui_elements = extract_ui_elements(snap);
  ctx.android = is_android_project(snap);
  for (const auto& [path, content] : snap.files)
    if (is_source_file(path)) ctx.code_files.emplace(path, tokenize_code(content));
  return ctx;
}

}  // namespace bugnav::extract
