#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "bugnav/error.hpp"
#include "bugnav/extract/code_lexer.hpp"

namespace bugnav::similarity {

struct GstOptions {
  int min_match_len = 9;
  // Compare token kinds only, so renamed identifiers still match.
  bool abstract_identifiers = true;
};

struct Tile {
  std::size_t a_pos;
  std::size_t b_pos;
  std::size_t length;
};

/// Greedy string tiling: repeatedly takes the longest common runs of
/// unmarked tokens (at least min_match_len long), marks them as tiles, and
/// stops once no run longer than the minimum remains.
template <typename T>
std::vector<Tile> greedy_string_tiling(std::span<const T> a, std::span<const T> b, std::size_t min_match_len) {
  if (min_match_len < 1) throw ValidationError("min_match_len must be >= 1");
  std::vector<char> marked_a(a.size(), 0), marked_b(b.size(), 0);
  std::vector<Tile> tiles;
  std::vector<Tile> matches;

  // Distance from each position to the next marked token (or the end).
  auto free_run = [](const std::vector<char>& marked) {
    std::vector<std::size_t> run(marked.size() + 1, 0);
    for (std::size_t i = marked.size(); i-- > 0;) run[i] = marked[i] ? 0 : run[i + 1] + 1;
    return run;
  };

  std::size_t max_match;
  do {
    max_match = min_match_len;
    matches.clear();
    const auto run_a = free_run(marked_a);
    const auto run_b = free_run(marked_b);
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (run_a[p] < max_match) continue;
      for (std::size_t t = 0; t < b.size(); ++t) {
        if (run_b[t] < max_match || a[p] != b[t]) continue;
        std::size_t j = 1;
        const std::size_t limit = std::min(run_a[p], run_b[t]);
        while (j < limit && a[p + j] == b[t + j]) ++j;
        if (j == max_match) {
          matches.push_back({p, t, j});
        } else if (j > max_match) {
          matches.assign(1, {p, t, j});
          max_match = j;
        }
      }
    }
    for (const auto& m : matches) {
      bool occluded = false;
      for (std::size_t k = 0; k < m.length && !occluded; ++k)
        occluded = marked_a[m.a_pos + k] || marked_b[m.b_pos + k];
      if (occluded) continue;
      for (std::size_t k = 0; k < m.length; ++k) marked_a[m.a_pos + k] = marked_b[m.b_pos + k] = 1;
      tiles.push_back(m);
    }
  } while (max_match > min_match_len);
  return tiles;
}

/// 2 * covered / (|a| + |b|). Both empty: 1. Exactly one empty: 0.
/// Ties between equally long runs are taken in scan order, which can make
/// the tiling depend on argument order; the better direction is used so the
/// score is symmetric.
template <typename T>
double tiling_similarity(std::span<const T> a, std::span<const T> b, std::size_t min_match_len) {
  if (min_match_len < 1) throw ValidationError("min_match_len must be >= 1");
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  auto covered = [&](std::span<const T> x, std::span<const T> y) {
    std::size_t n = 0;
    for (const auto& t : greedy_string_tiling(x, y, min_match_len)) n += t.length;
    return n;
  };
  const auto best = std::max(covered(a, b), covered(b, a));
  return 2.0 * static_cast<double>(best) / static_cast<double>(a.size() + b.size());
}

/// Maps tokens to integers for tiling; identifiers keep their spelling unless abstracted.
class TokenEncoder {
 public:
  explicit TokenEncoder(bool abstract_identifiers) : abstract_(abstract_identifiers) {}

  std::vector<int> encode(const extract::CodeTokenStream& s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (const auto& t : s.tokens) {
      const auto key = (!abstract_ && t.kind == "ident") ? "ident:" + t.text : t.kind;
      auto [it, inserted] = ids_.try_emplace(key, static_cast<int>(ids_.size()));
      out.push_back(it->second);
    }
    return out;
  }

 private:
  bool abstract_;
  std::unordered_map<std::string, int> ids_;
};

inline double gst_similarity(const extract::CodeTokenStream& a, const extract::CodeTokenStream& b,
                             const GstOptions& opts = {}) {
  if (opts.min_match_len < 1) throw ValidationError("min_match_len must be >= 1");
  TokenEncoder enc(opts.abstract_identifiers);
  const auto ea = enc.encode(a);
  const auto eb = enc.encode(b);
  return tiling_similarity<int>(ea, eb, static_cast<std::size_t>(opts.min_match_len));
}

}  // namespace bugnav::similarity
