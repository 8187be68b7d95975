#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <fmt/format.h>

namespace bugnav::corpus {

/// 64-bit FNV-1a, used for stable fixture and cache keys.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Request {
  std::string method = "GET";
  std::string path;  // e.g. /search/issues
  std::map<std::string, std::string> params;

  /// Unencoded, parameter-sorted form. Identical requests map to identical strings.
  [[nodiscard]] std::string canonical() const {
    std::string out = method + " " + path;
    char sep = '?';
    for (const auto& [k, v] : params) {
      out += sep;
      out += k;
      out += '=';
      out += v;
      sep = '&';
    }
    return out;
  }

  [[nodiscard]] std::string key() const { return fmt::format("{:016x}", fnv1a64(canonical())); }
};

struct Response {
  int status = 0;
  std::map<std::string, std::string> headers;  // lowercase names
  std::string body;

  [[nodiscard]] std::string header(const std::string& name) const {
    auto it = headers.find(name);
    return it == headers.end() ? std::string{} : it->second;
  }
};

class Transport {
 public:
  virtual ~Transport() = default;
  /// Throws TransportError when no response could be obtained.
  virtual Response send(const Request& request) = 0;
};

}  // namespace bugnav::corpus
