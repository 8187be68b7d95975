#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "bugnav/corpus/transport.hpp"

namespace bugnav::corpus {

using Duration = std::chrono::milliseconds;
using TimePoint = std::chrono::time_point<std::chrono::system_clock, Duration>;

class Clock {
 public:
  virtual ~Clock() = default;
  virtual TimePoint now() = 0;
  virtual void sleep_for(Duration d) = 0;
};

class SystemClock final : public Clock {
 public:
  TimePoint now() override {
    return std::chrono::time_point_cast<Duration>(std::chrono::system_clock::now());
  }
  void sleep_for(Duration d) override { std::this_thread::sleep_for(d); }
};

/// Time that only moves when someone sleeps. Used for replay runs and tests
/// so throttling is exercised without real waiting.
class VirtualClock final : public Clock {
 public:
  explicit VirtualClock(TimePoint start = TimePoint{}) : now_(start) {}
  TimePoint now() override {
    std::lock_guard lock(mu_);
    return now_;
  }
  void sleep_for(Duration d) override {
    std::lock_guard lock(mu_);
    if (d.count() > 0) now_ += d;
    slept_ += d.count() > 0 ? d : Duration{0};
  }
  void advance(Duration d) { sleep_for(d); }
  Duration total_slept() {
    std::lock_guard lock(mu_);
    return slept_;
  }

 private:
  std::mutex mu_;
  TimePoint now_;
  Duration slept_{0};
};

enum class Resource { search, core };

struct Quota {
  double capacity = 1;
  Duration period{1000};  // time to refill `capacity` tokens
};

/// Platform quotas: search 30/min and core 5000/h with a token, 10/min and 60/h without.
inline std::map<Resource, Quota> default_quotas(bool authenticated) {
  using namespace std::chrono_literals;
  if (authenticated) return {{Resource::search, {30, 60s}}, {Resource::core, {5000, 3600s}}};
  return {{Resource::search, {10, 60s}}, {Resource::core, {60, 3600s}}};
}

/// Single serialized gatekeeper every request passes through. One token
/// bucket per resource, plus hard blocks learned from rate-limit headers.
class RateGate {
 public:
  RateGate(std::shared_ptr<Clock> clock, std::map<Resource, Quota> quotas)
      : clock_(std::move(clock)) {
    const auto t = clock_->now();
    for (auto& [r, q] : quotas) buckets_[r] = Bucket{q, q.capacity, t, TimePoint{}};
  }

  /// Blocks (via the clock) until a request for `r` may be sent.
  void acquire(Resource r) {
    std::lock_guard lock(mu_);
    auto& b = buckets_.at(r);
    auto t = clock_->now();
    if (t < b.blocked_until) {
      clock_->sleep_for(b.blocked_until - t);
      t = clock_->now();
    }
    refill(b, t);
    if (b.tokens < 1.0) {
      const double per_token_ms = static_cast<double>(b.quota.period.count()) / b.quota.capacity;
      const auto wait = Duration(static_cast<Duration::rep>((1.0 - b.tokens) * per_token_ms + 0.999));
      clock_->sleep_for(wait);
      refill(b, clock_->now());
      b.tokens = std::max(b.tokens, 1.0);
    }
    b.tokens -= 1.0;
    ++granted_;
  }

  /// Honors x-ratelimit-remaining / x-ratelimit-reset from a response.
  void observe(Resource r, const Response& resp) {
    auto remaining = resp.header("x-ratelimit-remaining");
    auto reset = resp.header("x-ratelimit-reset");
    if (remaining != "0" || reset.empty()) return;
    std::lock_guard lock(mu_);
    auto& b = buckets_.at(r);
    b.blocked_until = TimePoint(std::chrono::seconds(std::stoll(reset)));
    b.tokens = 0;
  }

  [[nodiscard]] std::size_t granted() const {
    std::lock_guard lock(mu_);
    return granted_;
  }

 private:
  struct Bucket {
    Quota quota;
    double tokens = 0;
    TimePoint last;
    TimePoint blocked_until;
  };

  static void refill(Bucket& b, TimePoint t) {
    if (t <= b.last) return;
    const double elapsed = static_cast<double>((t - b.last).count());
    b.tokens = std::min(b.quota.capacity,
                        b.tokens + elapsed * b.quota.capacity / static_cast<double>(b.quota.period.count()));
    b.last = t;
  }

  std::shared_ptr<Clock> clock_;
  mutable std::mutex mu_;
  std::map<Resource, Bucket> buckets_;
  std::size_t granted_ = 0;
};

}  // namespace bugnav::corpus
