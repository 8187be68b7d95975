#pragma once

#include <filesystem>
#include <string>

namespace testpaths {

inline std::filesystem::path root() { return BUGNAV_TEST_ROOT; }
inline std::filesystem::path fixtures(const std::string& name) { return root() / "fixtures" / name; }
inline std::filesystem::path data(const std::string& name) { return root() / "data" / name; }

}  // namespace testpaths
