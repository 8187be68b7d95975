#pragma once

#include <algorithm>
#include <cstddef>
#include <set>

namespace bugnav::similarity {

/// |X ∩ Y| / min(|X|, |Y|); 0 when either set is empty.
template <typename T, typename Cmp>
double overlap_coefficient(const std::set<T, Cmp>& x, const std::set<T, Cmp>& y) {
  if (x.empty() || y.empty()) return 0.0;
  std::size_t common = 0;
  auto xi = x.begin();
  auto yi = y.begin();
  const Cmp less = x.key_comp();
  while (xi != x.end() && yi != y.end()) {
    if (less(*xi, *yi)) {
      ++xi;
    } else if (less(*yi, *xi)) {
      ++yi;
    } else {
      ++common;
      ++xi;
      ++yi;
    }
  }
  return static_cast<double>(common) / static_cast<double>(std::min(x.size(), y.size()));
}

}  // namespace bugnav::similarity
