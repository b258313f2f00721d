#include "lightsout/service.hpp"

#include <httplib.h>

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lightsout/errors.hpp"

namespace lightsout {

ServiceConfig config_from_env() {
  ServiceConfig c;
  if (const char* p = std::getenv("LIGHTSOUT_PORT")) c.port = std::stoi(p);
  if (const char* s = std::getenv("LIGHTSOUT_SNAPSHOT")) c.snapshot_path = s;
  if (const char* b = std::getenv("LIGHTSOUT_BUDGET")) c.budget = std::stoull(b);
  return c;
}

namespace {

using Clock = std::chrono::system_clock;

std::string iso_time(Clock::time_point t) {
  const std::time_t tt = Clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::int64_t millis(Clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
}

Clock::time_point from_millis(std::int64_t ms) { return Clock::time_point(std::chrono::milliseconds(ms)); }

Response error(int status, const std::string& message) { return {status, {{"error", message}}}; }

std::vector<std::size_t> pressed_vertices(const BitVector& a) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.get(i)) v.push_back(i);
  return v;
}

Graph graph_from_request(const json& g) {
  if (g.is_string()) return load_graph(g.get<std::string>());
  if (g.is_object()) return graph_from_json(g);
  throw std::invalid_argument("\"graph\" must be a generator string or a graph object");
}

std::vector<std::uint32_t> colored_values(const json& j) {
  try {
    return j.get<std::vector<std::uint32_t>>();
  } catch (const json::exception&) {
    throw std::invalid_argument("colored states are arrays of integers");
  }
}

BitVector random_bits(std::size_t n, std::mt19937_64& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1u) v.set(i);
  return v;
}

// Replays the press log from the initial state.
void replay(GameSession& s) {
  if (s.colored()) {
    s.colored_current = s.colored_initial;
    for (auto v : s.history) s.colored_current = press_colored(s.graph, s.colored_current, v);
  } else {
    s.current = s.initial;
    for (auto v : s.history) s.current = press(*s.spec, s.current, v);
  }
}

}  // namespace

json session_to_json(const GameSession& s) {
  json j = {{"id", s.id},
            {"graph", graph_to_json(s.graph)},
            {"n", s.graph.order()},
            {"history", s.history},
            {"created", iso_time(s.created)},
            {"modified", iso_time(s.modified)}};
  if (s.colored()) {
    j["variant"] = "classic";
    j["k"] = *s.k;
    j["initial"] = s.colored_initial.values;
    j["state"] = s.colored_current.values;
    j["solvable"] = solvable_colored(s.graph, s.colored_current, make_colored_state(*s.k, std::vector<std::uint32_t>(s.graph.order(), 0)));
  } else {
    const BitVector value = invariant_value(*s.spec, s.current);
    j["variant"] = to_string(s.spec->variant());
    j["initial"] = s.initial.to_string();
    j["state"] = s.current.to_string();
    j["invariant_value"] = value.to_string();
    j["solvable"] = value.none();
  }
  return j;
}

Service::Service(ServiceConfig config) : config_(std::move(config)), rng_(std::random_device{}()) {
  if (!config_.snapshot_path.empty()) {
    load_snapshot();
    writer_ = std::thread([this] { snapshot_loop(); });
  }
}

Service::~Service() {
  if (writer_.joinable()) {
    {
      std::lock_guard lk(snap_mutex_);
      stopping_ = true;
    }
    snap_cv_.notify_all();
    writer_.join();
  }
}

std::shared_ptr<Service::Entry> Service::find(const std::string& id) const {
  std::shared_lock lk(store_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::string Service::new_id() {
  std::lock_guard lk(rng_mutex_);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng_()));
  return buf;
}

std::size_t Service::session_count() const {
  std::shared_lock lk(store_mutex_);
  return sessions_.size();
}

Response Service::create_game(const json& body) {
  if (!body.is_object()) return error(400, "request body must be a JSON object");
  GameSession s;
  const std::string variant_text = body.value("variant", std::string("classic"));
  try {
    if (!body.contains("graph")) return error(400, "missing \"graph\"");
    s.graph = graph_from_request(body["graph"]);
    const Variant variant = parse_variant(variant_text);
    const std::size_t n = s.graph.order();

    std::mt19937_64 local_rng;
    if (body.contains("seed")) {
      local_rng.seed(body["seed"].get<std::uint64_t>());
    } else {
      std::lock_guard lk(rng_mutex_);
      local_rng.seed(rng_());
    }

    const json initial = body.value("initial", json("zeros"));
    if (body.contains("k") && !body["k"].is_null()) {
      const auto k = body["k"].get<std::uint32_t>();
      if (variant.kind != VariantKind::Classic) return error(400, "colored games use the classic rule");
      if (s.graph.directed()) return error(422, "colored games need an undirected graph");
      s.k = k;
      std::vector<std::uint32_t> values(n, 0);
      if (initial.is_string()) {
        const auto mode = initial.get<std::string>();
        std::uniform_int_distribution<std::uint32_t> color(0, k - 1);
        if (mode == "random") {
          for (auto& v : values) v = color(local_rng);
        } else if (mode == "random-solvable") {
          PressCounts a{k, std::vector<std::uint32_t>(n)};
          for (auto& c : a.counts) c = color(local_rng);
          values = apply_presses(s.graph, make_colored_state(k, values), a).values;
        } else if (mode != "zeros") {
          return error(400, "unknown initial mode '" + mode + "'");
        }
      } else {
        values = colored_values(initial);
      }
      s.colored_initial = make_colored_state(k, std::move(values));
      if (s.colored_initial.values.size() != n) return error(400, "initial state length does not match graph");
      s.colored_current = s.colored_initial;
    } else {
      s.spec = compile(s.graph, variant);
      if (!initial.is_string()) return error(400, "\"initial\" must be a bitstring or a mode");
      const auto text = initial.get<std::string>();
      if (text == "random") {
        s.initial = random_bits(n, local_rng);
      } else if (text == "random-solvable") {
        s.initial = s.spec->rule() * random_bits(n, local_rng);
      } else {
        s.initial = parse_state(text, n);
      }
      s.current = s.initial;
    }
  } catch (const UnsupportedGraph& e) {
    return error(422, e.what());
  } catch (const DirectednessMismatch& e) {
    return error(422, e.what());
  } catch (const std::invalid_argument& e) {
    return error(400, e.what());
  } catch (const json::exception& e) {
    return error(400, e.what());
  }

  s.id = new_id();
  s.created = s.modified = Clock::now();
  auto entry = std::make_shared<Entry>();
  entry->session = std::move(s);
  json out = session_to_json(entry->session);
  {
    std::unique_lock lk(store_mutex_);
    sessions_[entry->session.id] = entry;
  }
  mark_dirty();
  return {201, std::move(out)};
}

Response Service::get_game(const std::string& id) const {
  auto e = find(id);
  if (!e) return error(404, "unknown game " + id);
  std::shared_lock lk(e->mutex);
  return {200, session_to_json(e->session)};
}

Response Service::press(const std::string& id, const json& body) {
  auto e = find(id);
  if (!e) return error(404, "unknown game " + id);
  if (!body.is_object() || !body.contains("vertex") || !body["vertex"].is_number_integer())
    return error(400, "body must be {\"vertex\": <index>}");
  const auto vertex = body["vertex"].get<std::int64_t>();
  json out;
  {
    std::unique_lock lk(e->mutex);
    GameSession& s = e->session;
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= s.graph.order())
      return error(400, "vertex " + std::to_string(vertex) + " out of range");
    const auto v = static_cast<std::size_t>(vertex);
    if (s.colored())
      s.colored_current = press_colored(s.graph, s.colored_current, v);
    else
      s.current = lightsout::press(*s.spec, s.current, v);
    s.history.push_back(v);
    s.modified = Clock::now();
    out = session_to_json(s);
  }
  mark_dirty();
  return {200, std::move(out)};
}

Response Service::hint(const std::string& id, const json& body) const {
  auto e = find(id);
  if (!e) return error(404, "unknown game " + id);
  const json req = body.is_object() ? body : json::object();
  const std::string mode = req.value("mode", std::string("any"));
  if (mode != "any" && mode != "min") return error(400, "mode must be \"any\" or \"min\"");

  std::shared_lock lk(e->mutex);
  const GameSession& s = e->session;
  const std::size_t n = s.graph.order();
  try {
    if (s.colored()) {
      if (mode == "min") return error(400, "minimum hints are only available for two-state games");
      std::vector<std::uint32_t> tv(n, 0);
      if (req.contains("target")) tv = colored_values(req["target"]);
      const ColoredState target = make_colored_state(*s.k, std::move(tv));
      auto a = solve_general(s.graph, s.colored_current, target);
      if (!a) return {409, {{"error", "unsolvable"}, {"residual", nullptr}}};
      return {200, {{"mode", mode}, {"counts", a->counts}, {"k", *s.k}}};
    }
    const BitVector target = parse_state(req.value("target", std::string("zeros")), n);
    if (!equivalent(*s.spec, s.current, target))
      return {409,
              {{"error", "unsolvable"}, {"residual", invariant_value(*s.spec, s.current ^ target).to_string()}}};
    BitVector presses;
    if (mode == "min") {
      auto r = min_weight_solution(s.spec->rule(), s.current ^ target, config_.budget);
      if (!r) throw InvariantViolation("equivalent states without a minimum solution");
      presses = std::move(r->solution);
    } else {
      presses = solve_game(*s.spec, s.current, target)->presses;
    }
    json out = solution_to_json(presses, presses.popcount());
    out["mode"] = mode;
    out["vertices"] = pressed_vertices(presses);
    return {200, std::move(out)};
  } catch (const BudgetExceeded& ex) {
    return error(503, ex.what());
  } catch (const std::invalid_argument& ex) {
    return error(400, ex.what());
  }
}

Response Service::invariant(const std::string& id) const {
  auto e = find(id);
  if (!e) return error(404, "unknown game " + id);
  std::shared_lock lk(e->mutex);
  const GameSession& s = e->session;
  if (s.colored()) return error(400, "colored games have no GF(2) invariant");
  const BitVector value = invariant_value(*s.spec, s.current);
  return {200,
          {{"invariant", s.spec->invariant().to_strings()},
           {"rank", s.spec->rank()},
           {"value", value.to_string()},
           {"solvable", value.none()}}};
}

Response Service::remove(const std::string& id) {
  {
    std::unique_lock lk(store_mutex_);
    if (sessions_.erase(id) == 0) return error(404, "unknown game " + id);
  }
  mark_dirty();
  return {204, nullptr};
}

bool Service::replay_consistent(const std::string& id) const {
  auto e = find(id);
  if (!e) return false;
  std::shared_lock lk(e->mutex);
  GameSession copy = e->session;
  replay(copy);
  return copy.colored() ? copy.colored_current == e->session.colored_current : copy.current == e->session.current;
}

void Service::mark_dirty() {
  if (config_.snapshot_path.empty()) return;
  {
    std::lock_guard lk(snap_mutex_);
    ++dirty_gen_;
  }
  snap_cv_.notify_all();
}

void Service::flush() {
  if (config_.snapshot_path.empty()) return;
  std::unique_lock lk(snap_mutex_);
  const auto target = dirty_gen_;
  snap_cv_.notify_all();
  snap_cv_.wait(lk, [&] { return written_gen_ >= target; });
}

void Service::snapshot_loop() {
  std::unique_lock lk(snap_mutex_);
  for (;;) {
    snap_cv_.wait(lk, [&] { return stopping_ || dirty_gen_ != written_gen_; });
    if (dirty_gen_ != written_gen_) {
      const auto gen = dirty_gen_;
      lk.unlock();
      try {
        write_snapshot();
      } catch (const std::exception& ex) {
        std::cerr << "snapshot write failed: " << ex.what() << '\n';
      }
      lk.lock();
      written_gen_ = gen;
      snap_cv_.notify_all();
      continue;
    }
    if (stopping_) return;
  }
}

void Service::write_snapshot() {
  json sessions = json::array();
  {
    std::shared_lock lk(store_mutex_);
    for (const auto& [id, e] : sessions_) {
      std::shared_lock slk(e->mutex);
      const GameSession& s = e->session;
      json j = {{"id", s.id},
                {"graph", graph_to_json(s.graph)},
                {"history", s.history},
                {"created", millis(s.created)},
                {"modified", millis(s.modified)}};
      if (s.colored()) {
        j["k"] = *s.k;
        j["initial"] = s.colored_initial.values;
      } else {
        j["variant"] = to_string(s.spec->variant());
        j["initial"] = s.initial.to_string();
      }
      sessions.push_back(std::move(j));
    }
  }
  const std::string tmp = config_.snapshot_path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << json{{"sessions", sessions}}.dump();
  }
  std::filesystem::rename(tmp, config_.snapshot_path);
}

void Service::load_snapshot() {
  std::ifstream in(config_.snapshot_path);
  if (!in) return;
  const json root = json::parse(in);
  for (const auto& j : root.at("sessions")) {
    GameSession s;
    s.id = j.at("id").get<std::string>();
    s.graph = graph_from_json(j.at("graph"));
    s.history = j.at("history").get<std::vector<std::size_t>>();
    s.created = from_millis(j.at("created").get<std::int64_t>());
    s.modified = from_millis(j.at("modified").get<std::int64_t>());
    if (j.contains("k")) {
      s.k = j["k"].get<std::uint32_t>();
      s.colored_initial = make_colored_state(*s.k, j.at("initial").get<std::vector<std::uint32_t>>());
    } else {
      s.spec = compile(s.graph, parse_variant(j.at("variant").get<std::string>()));
      s.initial = parse_state(j.at("initial").get<std::string>(), s.graph.order());
    }
    replay(s);
    auto e = std::make_shared<Entry>();
    e->session = std::move(s);
    sessions_[e->session.id] = std::move(e);
  }
}

void mount(httplib::Server& server, Service& service) {
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    if (!r.body.is_null()) res.set_content(r.body.dump(), "application/json");
  };
  auto parse_body = [](const httplib::Request& req) -> std::optional<json> {
    if (req.body.empty()) return json::object();
    try {
      return json::parse(req.body);
    } catch (const json::parse_error&) {
      return std::nullopt;
    }
  };
  const Response bad_json{400, {{"error", "request body is not valid JSON"}}};

  server.Options(R"(/games.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  server.Post("/games", [&, reply, parse_body, bad_json](const httplib::Request& req, httplib::Response& res) {
    auto body = parse_body(req);
    reply(res, body ? service.create_game(*body) : bad_json);
  });
  server.Get(R"(/games/([0-9a-f]+))", [&, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get_game(req.matches[1]));
  });
  server.Delete(R"(/games/([0-9a-f]+))", [&, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.remove(req.matches[1]));
  });
  server.Post(R"(/games/([0-9a-f]+)/press)",
              [&, reply, parse_body, bad_json](const httplib::Request& req, httplib::Response& res) {
                auto body = parse_body(req);
                reply(res, body ? service.press(req.matches[1], *body) : bad_json);
              });
  server.Post(R"(/games/([0-9a-f]+)/hint)",
              [&, reply, parse_body, bad_json](const httplib::Request& req, httplib::Response& res) {
                auto body = parse_body(req);
                reply(res, body ? service.hint(req.matches[1], *body) : bad_json);
              });
  server.Get(R"(/games/([0-9a-f]+)/invariant)", [&, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.invariant(req.matches[1]));
  });
}

int serve(const ServiceConfig& config) {
  Service service(config);
  httplib::Server server;
  mount(server, service);
  std::cerr << "lightsout service listening on port " << config.port << '\n';
  if (!server.listen("0.0.0.0", config.port)) {
    std::cerr << "cannot bind port " << config.port << '\n';
    return 1;
  }
  return 0;
}

}  // namespace lightsout
