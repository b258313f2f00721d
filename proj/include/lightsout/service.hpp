#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <thread>
#include <vector>

#include "lightsout/colored.hpp"
#include "lightsout/game.hpp"
#include "lightsout/io.hpp"
#include "lightsout/minweight.hpp"

namespace httplib {
class Server;
}

namespace lightsout {

struct ServiceConfig {
  std::uint64_t budget = kDefaultCosetBudget;
  std::string snapshot_path;  // empty: no persistence
  int port = 8080;
};

/// Reads LIGHTSOUT_PORT, LIGHTSOUT_SNAPSHOT and LIGHTSOUT_BUDGET.
ServiceConfig config_from_env();

/// A live game. Binary sessions carry a compiled spec; colored sessions
/// carry k and integer states. In both cases current == initial + M * (sum of
/// history presses) over the session's algebra.
struct GameSession {
  std::string id;
  Graph graph;
  std::optional<GameSpec> spec;
  BitVector initial, current;
  std::optional<std::uint32_t> k;
  ColoredState colored_initial, colored_current;
  std::vector<std::size_t> history;
  std::chrono::system_clock::time_point created, modified;

  bool colored() const noexcept { return k.has_value(); }
};

struct Response {
  int status = 200;
  json body;
};

/// Transport-independent handlers for the HTTP API. Mutations on one
/// session are serialized; reads and distinct sessions run concurrently.
class Service {
 public:
  explicit Service(ServiceConfig config = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  Response create_game(const json& body);
  Response get_game(const std::string& id) const;
  Response press(const std::string& id, const json& body);
  Response hint(const std::string& id, const json& body) const;
  Response invariant(const std::string& id) const;
  Response remove(const std::string& id);

  /// Rebuilds the state from the initial state and the press log.
  bool replay_consistent(const std::string& id) const;
  std::size_t session_count() const;

  /// Blocks until pending snapshot writes are on disk.
  void flush();

  const ServiceConfig& config() const noexcept { return config_; }

 private:
  struct Entry {
    mutable std::shared_mutex mutex;
    GameSession session;
  };

  std::shared_ptr<Entry> find(const std::string& id) const;
  std::string new_id();
  void mark_dirty();
  void snapshot_loop();
  void write_snapshot();
  void load_snapshot();

  ServiceConfig config_;
  mutable std::shared_mutex store_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::mutex rng_mutex_;
  std::mt19937_64 rng_;

  std::mutex snap_mutex_;
  std::condition_variable snap_cv_;
  std::uint64_t dirty_gen_ = 0, written_gen_ = 0;
  bool stopping_ = false;
  std::thread writer_;
};

json session_to_json(const GameSession& s);

/// Registers the /games routes on `server`.
void mount(httplib::Server& server, Service& service);

/// Runs the HTTP server until stopped; returns nonzero if binding fails.
int serve(const ServiceConfig& config);

}  // namespace lightsout
