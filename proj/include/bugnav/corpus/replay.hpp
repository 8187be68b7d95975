#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "bugnav/corpus/transport.hpp"
#include "bugnav/error.hpp"

namespace bugnav::corpus {

namespace fs = std::filesystem;

// Fixture layout (one directory per recorded session):
//   <dir>/index.jsonl        one JSON object per line:
//                            {"key", "request", "status", "headers", "payload"}
//   <dir>/payloads/<key>.json  raw response body as served by the platform
// "key" is Request::key() of "request" (the canonical request string).

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TransportError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Serves recorded responses. Never touches the network; safe for concurrent readers.
class ReplayTransport final : public Transport {
 public:
  explicit ReplayTransport(fs::path dir) : dir_(std::move(dir)) {
    const auto index = dir_ / "index.jsonl";
    std::ifstream in(index);
    if (!in) throw NotFoundError("fixture index not found: " + index.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw ValidationError(fmt::format("{}:{}: {}", index.string(), lineno, e.what()));
      }
      Entry e;
      e.status = j.at("status").get<int>();
      e.payload = j.at("payload").get<std::string>();
      if (j.contains("headers"))
        for (auto& [k, v] : j["headers"].items()) e.headers[k] = v.get<std::string>();
      entries_[j.at("key").get<std::string>()] = std::move(e);
    }
  }

  Response send(const Request& request) override {
    const auto key = request.key();
    auto it = entries_.find(key);
    if (it == entries_.end())
      throw FixtureMissError("no recorded interaction for " + request.canonical() + " [" + key + "]");
    Response r;
    r.status = it->second.status;
    r.headers = it->second.headers;
    r.body = read_file(dir_ / it->second.payload);
    return r;
  }

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

 private:
  struct Entry {
    int status = 0;
    std::map<std::string, std::string> headers;
    std::string payload;
  };

  fs::path dir_;
  std::unordered_map<std::string, Entry> entries_;
};

/// Forwards to another transport and appends every exchange to a fixture directory.
class RecordingTransport final : public Transport {
 public:
  RecordingTransport(std::shared_ptr<Transport> inner, fs::path dir)
      : inner_(std::move(inner)), dir_(std::move(dir)) {
    fs::create_directories(dir_ / "payloads");
  }

  Response send(const Request& request) override {
    Response r = inner_->send(request);
    const auto key = request.key();
    const auto payload = "payloads/" + key + ".json";
    nlohmann::json headers = nlohmann::json::object();
    for (const char* name : {"date", "retry-after", "x-ratelimit-remaining", "x-ratelimit-reset"}) {
      auto v = r.header(name);
      if (!v.empty()) headers[name] = v;
    }
    nlohmann::json line = {{"key", key},
                           {"request", request.canonical()},
                           {"status", r.status},
                           {"headers", headers},
                           {"payload", payload}};
    std::lock_guard lock(mu_);
    std::ofstream(dir_ / payload, std::ios::binary) << r.body;
    std::ofstream(dir_ / "index.jsonl", std::ios::app) << line.dump() << '\n';
    return r;
  }

 private:
  std::shared_ptr<Transport> inner_;
  fs::path dir_;
  std::mutex mu_;
};

}  // namespace bugnav::corpus
