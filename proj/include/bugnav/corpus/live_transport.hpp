#pragma once

#include <cctype>
#include <memory>
#include <mutex>
#include <string>

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include "bugnav/corpus/transport.hpp"
#include "bugnav/error.hpp"

namespace bugnav::corpus {

/// HTTP(S) transport against the platform REST API.
class LiveTransport final : public Transport {
 public:
  explicit LiveTransport(std::string base_url, std::string token = {})
      : base_url_(std::move(base_url)), token_(std::move(token)) {}

  Response send(const Request& request) override {
    httplib::Headers headers{{"Accept", "application/vnd.github+json"},
                             {"User-Agent", "bugnav"},
                             {"X-GitHub-Api-Version", "2022-11-28"}};
    if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);
    httplib::Params params(request.params.begin(), request.params.end());

    // httplib clients are not safe for concurrent use; one per call.
    httplib::Client client(base_url_);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(request.path, params, headers);
    if (!res) throw TransportError(request.canonical() + ": " + httplib::to_string(res.error()));

    Response out;
    out.status = res->status;
    out.body = res->body;
    for (const auto& [k, v] : res->headers) {
      std::string name = k;
      for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      out.headers[name] = v;
    }
    return out;
  }

 private:
  std::string base_url_;
  std::string token_;
};

}  // namespace bugnav::corpus
