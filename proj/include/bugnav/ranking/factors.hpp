#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "bugnav/error.hpp"
#include "bugnav/ranking/quality.hpp"
#include "bugnav/similarity/similarity_vector.hpp"

namespace bugnav::ranking {

enum class Factor : std::size_t { issue_length, num_comment, code, dep, perm, ui, has_fix, keywords };

inline constexpr std::size_t kNumFactors = 8;

inline constexpr std::array<std::string_view, kNumFactors> kFactorNames = {
    "issue_length", "num_comment", "code", "dep", "perm", "ui", "has_fix", "keywords"};

inline std::optional<Factor> factor_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumFactors; ++i)
    if (kFactorNames[i] == name) return static_cast<Factor>(i);
  return std::nullopt;
}

struct FactorVector {
  std::array<double, kNumFactors> values{};

  double& operator[](Factor f) { return values[static_cast<std::size_t>(f)]; }
  double operator[](Factor f) const { return values[static_cast<std::size_t>(f)]; }
  bool operator==(const FactorVector&) const = default;
};

struct NormalizationCaps {
  double words = 500;
  double comments = 20;
  double keywords = 5;
};

inline double capped_ratio(double value, double cap) {
  if (cap <= 0) throw ValidationError("normalization cap must be positive");
  return std::clamp(value / cap, 0.0, 1.0);
}

inline FactorVector normalize_factors(const QualityMetrics& m, const similarity::SimilarityVector& s,
                                      const NormalizationCaps& caps = {}) {
  FactorVector f;
  f[Factor::issue_length] = capped_ratio(static_cast<double>(m.word_count), caps.words);
  f[Factor::num_comment] = capped_ratio(static_cast<double>(m.comment_count), caps.comments);
  f[Factor::code] = s.code;
  f[Factor::dep] = s.dependency;
  f[Factor::perm] = s.permission;
  f[Factor::ui] = s.ui;
  f[Factor::has_fix] = m.has_fix_commit ? 1.0 : 0.0;
  f[Factor::keywords] = capped_ratio(static_cast<double>(m.keyword_count), caps.keywords);
  return f;
}

}  // namespace bugnav::ranking
