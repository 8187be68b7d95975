#pragma once

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <boost/beast/core/detail/base64.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "bugnav/corpus/glob.hpp"
#include "bugnav/corpus/json.hpp"
#include "bugnav/corpus/rate_limit.hpp"
#include "bugnav/corpus/refs.hpp"
#include "bugnav/corpus/transport.hpp"
#include "bugnav/corpus/types.hpp"
#include "bugnav/error.hpp"
#include "bugnav/log.hpp"
#include "bugnav/querygen/search_query.hpp"

namespace bugnav::corpus {

struct SearchFilters {
  std::string language;  // empty: no language qualifier
  std::string state = "closed";  // empty: any state
  int max_results = 10;
};

struct ClientOptions {
  std::filesystem::path cache_dir;  // empty disables the snapshot cache
  int max_retries = 3;
  Duration backoff_base{500};
};

inline constexpr int kPlatformSearchCap = 1000;

inline std::string decode_base64(std::string_view encoded) {
  std::string clean;
  clean.reserve(encoded.size());
  for (char c : encoded)
    if (c != '\n' && c != '\r' && c != ' ') clean.push_back(c);
  std::string out(boost::beast::detail::base64::decoded_size(clean.size()), '\0');
  auto [written, read] = boost::beast::detail::base64::decode(out.data(), clean.data(), clean.size());
  // The decoder stops at the first '=' or invalid character; only padding may follow.
  if (clean.find_first_not_of('=', read) != std::string::npos || clean.size() - read > 2)
    throw TransportError("malformed base64 payload");
  out.resize(written);
  return out;
}

/// Access to the code-hosting platform's REST API. All requests go through
/// one RateGate and are retried (bounded, exponential backoff) on transient failures.
class PlatformClient {
 public:
  PlatformClient(std::shared_ptr<Transport> transport, std::shared_ptr<RateGate> gate,
                 std::shared_ptr<Clock> clock, ClientOptions opts = {})
      : transport_(std::move(transport)),
        gate_(std::move(gate)),
        clock_(std::move(clock)),
        opts_(std::move(opts)) {}

  std::vector<IssueHit> search_issues(const querygen::SearchQuery& query, const SearchFilters& filters) {
    if (query.text.find_first_not_of(" \t\r\n") == std::string::npos)
      throw ValidationError("search query text is empty");
    const auto full = query.full_text();
    if (full.size() > querygen::kMaxQueryLength)
      throw ValidationError(fmt::format("search query is {} characters; the limit is {}", full.size(),
                                        querygen::kMaxQueryLength));
    if (filters.max_results < 1 || filters.max_results > kPlatformSearchCap)
      throw ValidationError("max_results must be within 1..1000");

    std::string q = full;
    if (!filters.language.empty()) q += " language:" + filters.language;
    if (!filters.state.empty()) q += " state:" + filters.state;

    const int per_page = std::min(100, filters.max_results);
    std::vector<IssueHit> hits;
    for (int page = 1; static_cast<int>(hits.size()) < filters.max_results; ++page) {
      Request req{"GET", "/search/issues",
                  {{"q", q}, {"per_page", std::to_string(per_page)}, {"page", std::to_string(page)}}};
      auto payload = get_json(req, Resource::search).body;
      const auto& items = payload.at("items");
      for (const auto& item : items) {
        if (static_cast<int>(hits.size()) == filters.max_results) break;
        IssueHit hit{issue_from_json(item), static_cast<int>(hits.size()) + 1};
        hit.issue.project_language = filters.language;
        hits.push_back(std::move(hit));
      }
      const auto total = payload.value("total_count", 0);
      if (static_cast<int>(items.size()) < per_page || static_cast<int>(hits.size()) >= total) break;
    }
    return hits;
  }

  IssueDocument fetch_issue(const IssueRef& ref) {
    const auto base = fmt::format("/repos/{}/{}/issues/{}", ref.owner, ref.repo, ref.number);
    IssueDocument doc = issue_from_json(get_json({"GET", base, {}}, Resource::core).body);
    doc.ref = ref;
    if (doc.num_comments > 0) {
      for (int page = 1;; ++page) {
        auto payload = get_json({"GET", base + "/comments", {{"per_page", "100"}, {"page", std::to_string(page)}}},
                                Resource::core)
                           .body;
        for (const auto& c : payload) doc.comments.push_back(string_or_empty(c, "body"));
        if (payload.size() < 100) break;
      }
    }
    doc.num_comments = static_cast<std::int64_t>(doc.comments.size());
    doc.comments_fetched = true;
    doc.linked_patch_refs = extract_patch_refs(doc);
    return doc;
  }

  /// First linked patch that resolves to a non-empty diff, or none.
  std::optional<Patch> fetch_patch(const IssueDocument& issue) {
    static const std::regex pull_re(R"(^([\w.-]+)/([\w.-]+)/pull/(\d+)$)");
    static const std::regex commit_re(R"(^([\w.-]+)/([\w.-]+)/commit/([0-9a-f]{7,40})$)");
    for (const auto& ref : issue.linked_patch_refs) {
      std::smatch m;
      std::string path;
      if (std::regex_match(ref, m, pull_re)) {
        path = fmt::format("/repos/{}/{}/pulls/{}/files", m[1].str(), m[2].str(), m[3].str());
      } else if (std::regex_match(ref, m, commit_re)) {
        path = fmt::format("/repos/{}/{}/commits/{}", m[1].str(), m[2].str(), m[3].str());
      } else {
        path = fmt::format("/repos/{}/{}/commits/{}", issue.ref.owner, issue.ref.repo, ref);
      }
      const bool is_pull = path.ends_with("/files");
      nlohmann::json files;
      try {
        auto payload = get_json({"GET", path, is_pull ? Params{{"per_page", "100"}} : Params{}}, Resource::core).body;
        files = is_pull ? payload : payload.value("files", nlohmann::json::array());
      } catch (const NotFoundError&) {
        logger()->warn("patch reference {} of {} could not be resolved; skipping", ref, issue.ref.str());
        continue;
      }
      Patch patch{ref, {}};
      for (const auto& f : files) {
        ModifiedFile mf{f.value("filename", ""), "", string_or_empty(f, "patch")};
        if (mf.path.empty()) continue;
        if (std::any_of(patch.modified_files.begin(), patch.modified_files.end(),
                        [&](const ModifiedFile& o) { return o.path == mf.path; }))
          continue;
        if (f.value("status", "") != "removed") mf.new_content = fetch_contents(string_or_empty(f, "contents_url"));
        patch.modified_files.push_back(std::move(mf));
      }
      if (patch.modified_files.empty()) {
        logger()->warn("patch reference {} of {} has no modified files; skipping", ref, issue.ref.str());
        continue;
      }
      return patch;
    }
    return std::nullopt;
  }

  RepoSnapshot fetch_repo_snapshot(const RepoId& repo, const std::vector<std::string>& include_globs) {
    if (include_globs.empty()) throw ValidationError("include_globs must not be empty");
    const auto head = get_json({"GET", fmt::format("/repos/{}/{}/commits/HEAD", repo.owner, repo.repo), {}},
                               Resource::core);
    const auto sha = head.body.at("sha").get<std::string>();

    std::vector<std::string> sorted_globs = include_globs;
    std::sort(sorted_globs.begin(), sorted_globs.end());
    const auto cache_file = cache_path(repo, sha, sorted_globs);
    if (cache_file && std::filesystem::exists(*cache_file)) {
      try {
        return nlohmann::json::parse(read_cache(*cache_file)).get<RepoSnapshot>();
      } catch (const nlohmann::json::exception& e) {
        logger()->warn("ignoring unreadable snapshot cache {}: {}", cache_file->string(), e.what());
      }
    }

    RepoSnapshot snap;
    snap.repo = repo;
    snap.head_commit = sha;
    snap.fetched_at = head.date.empty() ? now_http_date() : head.date;
    const auto tree = get_json({"GET", fmt::format("/repos/{}/{}/git/trees/{}", repo.owner, repo.repo, sha),
                                {{"recursive", "1"}}},
                               Resource::core)
                          .body;
    if (tree.value("truncated", false))
      logger()->warn("tree listing for {} is truncated; snapshot may be incomplete", repo.str());
    const GlobSet globs(include_globs);
    for (const auto& entry : tree.at("tree")) {
      if (entry.value("type", "") != "blob") continue;
      const auto path = entry.value("path", "");
      if (!globs.matches(path)) continue;
      const auto blob = get_json({"GET",
                                  fmt::format("/repos/{}/{}/git/blobs/{}", repo.owner, repo.repo,
                                              entry.at("sha").get<std::string>()),
                                  {}},
                                 Resource::core)
                            .body;
      snap.files[path] = decode_base64(blob.value("content", ""));
    }
    if (cache_file) write_cache(*cache_file, nlohmann::json(snap).dump());
    return snap;
  }

 private:
  using Params = std::map<std::string, std::string>;

  struct JsonResponse {
    nlohmann::json body;
    std::string date;
  };

  JsonResponse get_json(const Request& req, Resource resource) {
    for (int attempt = 0;; ++attempt) {
      gate_->acquire(resource);
      Response resp;
      try {
        resp = transport_->send(req);
      } catch (const FixtureMissError&) {
        throw;
      } catch (const TransportError& e) {
        if (attempt >= opts_.max_retries) throw;
        logger()->warn("{} failed ({}); retrying", req.canonical(), e.what());
        clock_->sleep_for(opts_.backoff_base * (1 << attempt));
        continue;
      }
      gate_->observe(resource, resp);

      if (resp.status >= 200 && resp.status < 300) {
        try {
          return {nlohmann::json::parse(resp.body), resp.header("date")};
        } catch (const nlohmann::json::exception& e) {
          throw TransportError("malformed JSON from " + req.canonical() + ": " + e.what());
        }
      }
      if (resp.status == 404) throw NotFoundError("not found: " + req.canonical());
      if (resp.status == 422) throw ValidationError("rejected by platform: " + req.canonical());
      if (is_rate_limited(resp)) throw RateLimitError("rate limit exceeded for " + req.canonical(), wait_hint(resp));
      if (resp.status >= 500 && attempt < opts_.max_retries) {
        logger()->warn("{} returned {}; retrying", req.canonical(), resp.status);
        clock_->sleep_for(opts_.backoff_base * (1 << attempt));
        continue;
      }
      throw TransportError(fmt::format("{} returned HTTP {}", req.canonical(), resp.status));
    }
  }

  static bool is_rate_limited(const Response& r) {
    if (r.status == 429) return true;
    return r.status == 403 && (r.header("x-ratelimit-remaining") == "0" || !r.header("retry-after").empty());
  }

  std::chrono::seconds wait_hint(const Response& r) const {
    if (auto ra = r.header("retry-after"); !ra.empty()) return std::chrono::seconds(std::stoll(ra));
    if (auto reset = r.header("x-ratelimit-reset"); !reset.empty()) {
      const auto until = std::chrono::seconds(std::stoll(reset));
      const auto now = std::chrono::duration_cast<std::chrono::seconds>(clock_->now().time_since_epoch());
      return std::max(std::chrono::seconds(0), until - now);
    }
    return std::chrono::seconds(60);
  }

  std::string fetch_contents(const std::string& contents_url) {
    static const std::regex re(R"(/repos/([^/]+)/([^/]+)/contents/([^?]+)(?:\?ref=([0-9A-Za-z._/-]+))?$)");
    std::smatch m;
    if (!std::regex_search(contents_url, m, re)) return {};
    Params params;
    if (m[4].matched) params["ref"] = m[4];
    try {
      auto body = get_json({"GET", fmt::format("/repos/{}/{}/contents/{}", m[1].str(), m[2].str(), m[3].str()), params},
                           Resource::core)
                      .body;
      return decode_base64(body.value("content", ""));
    } catch (const NotFoundError&) {
      logger()->warn("contents not available: {}", contents_url);
      return {};
    }
  }

  std::optional<std::filesystem::path> cache_path(const RepoId& repo, const std::string& sha,
                                                  const std::vector<std::string>& sorted_globs) const {
    if (opts_.cache_dir.empty()) return std::nullopt;
    std::string glob_key;
    for (const auto& g : sorted_globs) glob_key += g + '\n';
    return opts_.cache_dir / "snapshots" / repo.owner / repo.repo /
           fmt::format("{}-{:016x}.json", sha, fnv1a64(glob_key));
  }

  static std::string read_cache(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  // Write-then-rename so concurrent readers never see a partial file.
  static void write_cache(const std::filesystem::path& p, const std::string& data) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
    auto tmp = p;
    tmp += fmt::format(".tmp{:x}", fnv1a64(data) ^ reinterpret_cast<std::uintptr_t>(&data));
    {
      std::ofstream out(tmp, std::ios::binary);
      out << data;
    }
    std::filesystem::rename(tmp, p, ec);
    if (ec) logger()->warn("could not write snapshot cache {}: {}", p.string(), ec.message());
  }

  std::string now_http_date() const {
    const auto t = std::chrono::system_clock::to_time_t(clock_->now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[64];
    std::strftime(buf, sizeof buf, "%a, %d %b %Y %H:%M:%S GMT", &tm);
    return buf;
  }

  std::shared_ptr<Transport> transport_;
  std::shared_ptr<RateGate> gate_;
  std::shared_ptr<Clock> clock_;
  ClientOptions opts_;
};

}  // namespace bugnav::corpus
