#pragma once

#include <array>
#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "bugnav/error.hpp"
#include "bugnav/ranking/factors.hpp"

namespace bugnav::ranking {

struct WeightConfig {
  double w_issue_length = 0.0714;
  double w_num_comment = 0.1428;
  double w_code = 0.1428;
  double w_dep = 0.2142;
  double w_perm = 0.2142;
  double w_ui = 0.2142;
  double w_has_fix = 0.0;
  double w_keywords = 0.0;

  // Same order as Factor.
  [[nodiscard]] std::array<double, kNumFactors> as_array() const {
    return {w_issue_length, w_num_comment, w_code, w_dep, w_perm, w_ui, w_has_fix, w_keywords};
  }

  static WeightConfig from_array(const std::array<double, kNumFactors>& a) {
    WeightConfig w{a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
    w.validate();
    return w;
  }

  double& at(Factor f) {
    switch (f) {
      case Factor::issue_length: return w_issue_length;
      case Factor::num_comment: return w_num_comment;
      case Factor::code: return w_code;
      case Factor::dep: return w_dep;
      case Factor::perm: return w_perm;
      case Factor::ui: return w_ui;
      case Factor::has_fix: return w_has_fix;
      case Factor::keywords: return w_keywords;
    }
    throw ValidationError("unknown factor");
  }

  void validate() const {
    for (double w : as_array())
      if (!(w >= 0.0)) throw ValidationError("weights must be non-negative");
  }

  bool operator==(const WeightConfig&) const = default;
};

inline void to_json(nlohmann::json& j, const WeightConfig& w) {
  const auto a = w.as_array();
  j = nlohmann::json::object();
  for (std::size_t i = 0; i < kNumFactors; ++i) j["w_" + std::string(kFactorNames[i])] = a[i];
}

/// Missing keys keep their defaults; unknown keys are rejected.
inline void from_json(const nlohmann::json& j, WeightConfig& w) {
  if (!j.is_object()) throw ValidationError("weights must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!key.starts_with("w_")) throw ValidationError("unknown weight: " + key);
    const auto f = factor_from_name(std::string_view(key).substr(2));
    if (!f || !value.is_number()) throw ValidationError("bad weight entry: " + key);
    w.at(*f) = value.get<double>();
  }
  w.validate();
}

/// Eq. 6: the weighted sum of the factors.
inline double score(const FactorVector& factors, const WeightConfig& weights) {
  const auto w = weights.as_array();
  double s = 0.0;
  for (std::size_t i = 0; i < kNumFactors; ++i) s += factors.values[i] * w[i];
  return s;
}

}  // namespace bugnav::ranking
