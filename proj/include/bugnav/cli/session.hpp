#pragma once

#include <cstdlib>
#include <memory>

#include "bugnav/cli/run_config.hpp"
#include "bugnav/corpus/client.hpp"
#include "bugnav/corpus/live_transport.hpp"
#include "bugnav/corpus/rate_limit.hpp"
#include "bugnav/corpus/replay.hpp"

namespace bugnav::cli {

/// Builds a client for the run: replay from fixtures (virtual clock, no
/// network) or live, optionally recording every response.
inline std::unique_ptr<corpus::PlatformClient> make_client(const RunConfig& config) {
  config.validate();
  std::shared_ptr<corpus::Transport> transport;
  std::shared_ptr<corpus::Clock> clock;
  bool authenticated = false;
  if (config.fixture_dir) {
    transport = std::make_shared<corpus::ReplayTransport>(*config.fixture_dir);
    clock = std::make_shared<corpus::VirtualClock>();
    authenticated = true;
  } else {
    const char* token = std::getenv(config.auth_token_env.c_str());
    authenticated = token && *token;
    transport = std::make_shared<corpus::LiveTransport>(config.api_base, authenticated ? token : "");
    if (config.record_dir) transport = std::make_shared<corpus::RecordingTransport>(transport, *config.record_dir);
    clock = std::make_shared<corpus::SystemClock>();
  }
  auto gate = std::make_shared<corpus::RateGate>(clock, corpus::default_quotas(authenticated));
  return std::make_unique<corpus::PlatformClient>(transport, gate, clock,
                                                  corpus::ClientOptions{config.cache_dir, 3, corpus::Duration{500}});
}

}  // namespace bugnav::cli
