#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bugnav/corpus/types.hpp"
#include "bugnav/extract/mentions.hpp"
#include "bugnav/extract/repo_context.hpp"
#include "bugnav/similarity/gst.hpp"
#include "bugnav/similarity/overlap.hpp"

namespace bugnav::similarity {

enum class Component { code, dependency, permission, ui };

inline std::string_view to_string(Component c) {
  switch (c) {
    case Component::code: return "code";
    case Component::dependency: return "dependency";
    case Component::permission: return "permission";
    case Component::ui: return "ui";
  }
  return "unknown";
}

/// Per-candidate similarity scores in [0,1]. Components that did not run
/// are 0 and absent from `applicable`.
struct SimilarityVector {
  double code = 0;
  double dependency = 0;
  double permission = 0;
  double ui = 0;
  std::set<Component> applicable;
};

/// Maximum pairwise tiling similarity between the driver's source files and
/// the patch's modified source files; none when either side has no source.
inline std::optional<double> code_similarity(const extract::RepoContext& driver, const corpus::Patch& patch,
                                             const GstOptions& opts = {}) {
  if (driver.code_files.empty()) return std::nullopt;
  TokenEncoder enc(opts.abstract_identifiers);
  std::vector<std::vector<int>> patch_files;
  for (const auto& f : patch.modified_files)
    if (extract::is_source_file(f.path) && !f.new_content.empty())
      patch_files.push_back(enc.encode(extract::tokenize_code(f.new_content)));
  if (patch_files.empty()) return std::nullopt;

  double best = 0.0;
  for (const auto& [path, stream] : driver.code_files) {
    const auto d = enc.encode(stream);
    for (const auto& p : patch_files) {
      best = std::max(best, tiling_similarity<int>(d, p, static_cast<std::size_t>(opts.min_match_len)));
      if (best >= 1.0) return best;
    }
  }
  return best;
}

struct IssueSide {
  const corpus::IssueDocument& issue;
  const extract::RepoContext& context;
};

inline std::set<std::string> set_union(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

/// The driver's artifact set is what its repository declares plus whatever
/// its text mentions from either repository; the candidate contributes its
/// declared set only. None when either set is empty (nothing to compare).
inline std::optional<double> artifact_similarity(const IssueSide& driver, const std::set<std::string>& driver_declared,
                                                 const std::set<std::string>& candidate_declared) {
  const auto driver_set = set_union(
      driver_declared, extract::extract_mentions(driver.issue, set_union(driver_declared, candidate_declared)));
  if (driver_set.empty() || candidate_declared.empty()) return std::nullopt;
  return overlap_coefficient(driver_set, candidate_declared);
}

inline SimilarityVector similarity_vector(const IssueSide& driver, const IssueSide& candidate,
                                          const std::optional<corpus::Patch>& candidate_patch,
                                          const GstOptions& gst = {}) {
  SimilarityVector v;
  auto apply = [&](Component c, double& slot, const std::optional<double>& value) {
    if (!value) return;
    slot = *value;
    v.applicable.insert(c);
  };
  apply(Component::dependency, v.dependency,
        artifact_similarity(driver, driver.context.dependency_names(), candidate.context.dependency_names()));
  if (driver.context.android && candidate.context.android) {
    apply(Component::permission, v.permission,
          artifact_similarity(driver, driver.context.permissions, candidate.context.permissions));
    apply(Component::ui, v.ui, artifact_similarity(driver, driver.context.ui_elements, candidate.context.ui_elements));
  }
  if (candidate_patch) apply(Component::code, v.code, code_similarity(driver.context, *candidate_patch, gst));
  return v;
}

}  // namespace bugnav::similarity
