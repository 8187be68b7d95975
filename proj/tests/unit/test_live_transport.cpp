#include <gtest/gtest.h>

#include <filesystem>
#include <thread>

#include "bugnav/corpus/client.hpp"
#include "bugnav/corpus/live_transport.hpp"
#include "bugnav/corpus/replay.hpp"

using namespace bugnav;
using namespace bugnav::corpus;

namespace {

/// A local stand-in for the platform API on an ephemeral port.
class FakeApi {
 public:
  FakeApi() {
    server_.Get("/search/issues", [this](const httplib::Request& req, httplib::Response& res) {
      last_query = req.get_param_value("q");
      last_auth = req.get_header_value("Authorization");
      res.set_header("X-RateLimit-Remaining", "29");
      res.set_content(R"({"total_count":1,"items":[{"repository_url":"https://api.github.com/repos/a/b",)"
                      R"("number":7,"title":"t","body":"b","state":"closed","comments":0}]})",
                      "application/json");
    });
    server_.Get("/repos/a/b/issues/9", [](const httplib::Request&, httplib::Response& res) {
      res.status = 404;
      res.set_content(R"({"message":"Not Found"})", "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::jthread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeApi() { server_.stop(); }

  [[nodiscard]] std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

  std::string last_query;
  std::string last_auth;

 private:
  httplib::Server server_;
  int port_ = 0;
  std::jthread thread_;
};

}  // namespace

TEST(LiveTransport, SendsParamsAndTokenAndLowercasesHeaders) {
  FakeApi api;
  LiveTransport t(api.url(), "secret");
  const auto res = t.send({"GET", "/search/issues", {{"q", "a b:c"}, {"page", "1"}}});
  EXPECT_EQ(res.status, 200);
  EXPECT_EQ(res.header("x-ratelimit-remaining"), "29");
  EXPECT_EQ(api.last_query, "a b:c");
  EXPECT_EQ(api.last_auth, "Bearer secret");
}

TEST(LiveTransport, AnonymousRequestsCarryNoToken) {
  FakeApi api;
  LiveTransport(api.url()).send({"GET", "/search/issues", {{"q", "x"}}});
  EXPECT_EQ(api.last_auth, "");
}

TEST(LiveTransport, ConnectionFailureIsTransportError) {
  LiveTransport t("http://127.0.0.1:1");
  EXPECT_THROW(t.send({"GET", "/x", {}}), TransportError);
}

TEST(LiveTransport, ClientSearchesAndRecordsForReplay) {
  FakeApi api;
  const auto dir = std::filesystem::temp_directory_path() / ("bugnav_live_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  auto clock = std::make_shared<VirtualClock>();
  auto recording = std::make_shared<RecordingTransport>(std::make_shared<LiveTransport>(api.url()), dir);
  PlatformClient live(recording, std::make_shared<RateGate>(clock, default_quotas(false)), clock, {});
  const querygen::SearchQuery q{"boom", {"in:title"}, querygen::Strategy::summary_title_scoped};
  const auto hits = live.search_issues(q, {"java", "closed", 10});
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].issue.ref.str(), "a/b#7");
  EXPECT_EQ(api.last_query, "boom in:title language:java state:closed");
  EXPECT_THROW(live.fetch_issue(IssueRef::parse("a/b#9")), NotFoundError);

  PlatformClient replay(std::make_shared<ReplayTransport>(dir), std::make_shared<RateGate>(clock, default_quotas(true)),
                        clock, {});
  EXPECT_EQ(replay.search_issues(q, {"java", "closed", 10})[0].issue.ref.str(), "a/b#7");
  EXPECT_THROW(replay.fetch_issue(IssueRef::parse("a/b#9")), NotFoundError);
  std::filesystem::remove_all(dir);
}
