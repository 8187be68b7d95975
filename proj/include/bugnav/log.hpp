#pragma once

#include <memory>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

namespace bugnav {

// Library-wide logger. Writes to stderr so structured stdout stays clean.
inline std::shared_ptr<spdlog::logger> logger() {
  static auto instance = [] {
    auto existing = spdlog::get("bugnav");
    if (existing) return existing;
    auto created = spdlog::stderr_color_mt("bugnav");
    created->set_level(spdlog::level::warn);
    return created;
  }();
  return instance;
}

}  // namespace bugnav
