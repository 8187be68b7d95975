#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

#include "bugnav/error.hpp"
#include "bugnav/evalharness/dataset.hpp"
#include "bugnav/evalharness/evaluate.hpp"
#include "bugnav/parallel.hpp"
#include "bugnav/ranking/weights.hpp"

namespace bugnav::ranking {

inline constexpr std::array<Factor, 4> kSweptFactors = {Factor::code, Factor::dep, Factor::perm, Factor::ui};

struct TuneResult {
  WeightConfig weights;
  double mrr = 0;           // of the returned weights
  double baseline_mrr = 0;  // of the starting weights
  std::size_t evaluated = 0;
};

/// Values start + j*step (j any integer) that fall in [0, 1].
inline std::vector<double> grid_axis(double start, double step) {
  constexpr double eps = 1e-9;
  std::vector<double> values;
  const auto lo = static_cast<long>(std::ceil((-start - eps) / step));
  const auto hi = static_cast<long>(std::floor((1.0 - start + eps) / step));
  for (long j = lo; j <= hi; ++j) {
    double v = start + static_cast<double>(j) * step;
    if (std::abs(v) < eps) v = 0.0;
    values.push_back(v);
  }
  return values;
}

/// Grid search over the similarity weights. Issue-length and comment
/// weights stay fixed; each swept weight moves in steps from its starting
/// value, and a combination is kept only while all weights sum to at most 1.
/// Maximizes re-ranked MRR; ties go to the lexicographically smallest
/// (code, dep, perm, ui) tuple.
inline TuneResult tune_weights(const evalharness::EvalDataset& dataset, double grid_step,
                               const WeightConfig& start = {},
                               unsigned threads = std::thread::hardware_concurrency()) {
  if (dataset.entries.empty()) throw ValidationError("dataset is empty");
  if (!(grid_step > 0.0 && grid_step <= 1.0)) throw ValidationError("grid_step must be in (0, 1]");
  const double inv = 1.0 / grid_step;
  if (std::abs(inv - std::round(inv)) > 0.01 * std::round(inv))
    throw ValidationError("grid_step must divide 1 evenly");
  start.validate();

  std::array<std::vector<double>, kSweptFactors.size()> axes;
  double fixed_sum = 0;
  {
    auto w = start;
    for (std::size_t i = 0; i < kSweptFactors.size(); ++i) {
      axes[i] = grid_axis(w.at(kSweptFactors[i]), grid_step);
      w.at(kSweptFactors[i]) = 0;
    }
    for (double v : w.as_array()) fixed_sum += v;
  }

  // Enumerate in lexicographic order so the first maximum is the smallest tuple.
  std::vector<WeightConfig> points;
  for (double a : axes[0])
    for (double b : axes[1])
      for (double c : axes[2])
        for (double d : axes[3]) {
          if (fixed_sum + a + b + c + d > 1.0 + 1e-9) continue;
          auto w = start;
          w.w_code = a;
          w.w_dep = b;
          w.w_perm = c;
          w.w_ui = d;
          points.push_back(w);
        }
  if (points.empty()) points.push_back(start);

  std::vector<double> mrr(points.size());
  parallel_for(points.size(), [&](std::size_t i) { mrr[i] = evalharness::reranked_mrr(dataset, points[i]); },
               threads);

  std::size_t best = 0;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (mrr[i] > mrr[best]) best = i;
  return {points[best], mrr[best], evalharness::reranked_mrr(dataset, start), points.size()};
}

}  // namespace bugnav::ranking
