#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lightsout/cli.hpp"
#include "lightsout/io.hpp"

using namespace lightsout;

namespace {

struct Result {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lightsout");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve") {
  auto r = cli({"solve", "--graph", "cycle:3", "--variant", "classic", "--from", "100", "--to", "000"});
  CHECK(r.code == 1);
  CHECK(r.out.find("unsolvable") != std::string::npos);
  CHECK(r.out.find("10") != std::string::npos);
  auto rj = cli({"solve", "--graph", "cycle:3", "--from", "100", "--to", "000", "--json"});
  CHECK(rj.code == 1);
  CHECK(rj.j()["residual"] == "10");
  CHECK(rj.j()["solvable"] == false);

  auto s = cli({"solve", "--graph", "path:3", "--from", "000", "--to", "111", "--json"});
  CHECK(s.code == 0);
  CHECK(s.j()["presses"] == "010");
  CHECK(s.j()["weight"] == 1);
}

TEST_CASE("min-solve") {
  auto r = cli({"min-solve", "--graph", "grid:5x5", "--from", std::string(25, '0'), "--to", std::string(25, '1'),
                "--json"});
  CHECK(r.code == 0);
  CHECK(r.j()["weight"] == 15);
  CHECK(r.j()["coset_size"] == 4);
  auto b = cli({"min-solve", "--graph", "grid:5x5", "--to", "ones", "--budget", "2"});
  CHECK(b.code == 3);
  auto u = cli({"min-solve", "--graph", "cycle:3", "--from", "100"});
  CHECK(u.code == 1);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"solve"}).code == 2);
  CHECK(cli({"solve", "--graph", "path:3", "--from", "01"}).code == 2);
  CHECK(cli({"solve", "--graph", "path:3", "--variant", "second"}).code == 2);
  CHECK(cli({"solve", "--graph", "path:3", "--variant", "asymmetric"}).code == 2);
  CHECK(cli({"special", "--graph", "cycle:4", "--variant", "second"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("json outputs carry documented keys") {
  auto inv = cli({"invariant", "--graph", "grid:5x5", "--json"});
  CHECK(inv.code == 0);
  CHECK(inv.j()["rank"] == 23);
  CHECK(inv.j()["invariant"].size() == 2);
  CHECK(inv.j().contains("value"));

  auto chk = cli({"check", "--graph", "complete:3", "--from", "111", "--to", "000", "--json"});
  CHECK(chk.code == 0);
  CHECK(chk.j()["equivalent"] == true);
  CHECK(cli({"check", "--graph", "complete:3", "--from", "100", "--to", "000"}).code == 1);

  auto sp = cli({"special", "--graph", "complete:3", "--kind", "inverting", "--json"});
  CHECK(sp.j()["vector"] == "100");
  auto all = cli({"special", "--graph", "complete:3", "--kind", "inverting", "--all", "--json"});
  CHECK(all.j()["count"] == 4);
  CHECK(cli({"special", "--graph", "path:3", "--kind", "neutral"}).code == 1);

  auto col = cli({"colored-solve", "--graph", "path:3", "--from", R"({"k":6,"values":[0,0,0]})", "--to",
                  R"({"k":6,"values":[1,1,1]})", "--json"});
  CHECK(col.code == 0);
  CHECK(col.j()["counts"] == json::parse("[0,1,0]"));
  CHECK(col.j()["method"] == "squarefree");
  auto col4 = cli({"colored-solve", "--graph", "path:3", "--k", "4", "--from", "zeros", "--to", "1,1,1", "--json"});
  CHECK(col4.j()["method"] == "snf");
  CHECK(col4.j()["counts"] == json::parse("[0,1,0]"));
  CHECK(cli({"colored-solve", "--graph", "complete:3", "--k", "3", "--to", "1,0,0"}).code == 1);

  auto cc = cli({"circuit-check", "--graph", "grid:3x3", "--presses", "40", "--json"});
  CHECK(cc.code == 0);
  CHECK(cc.j()["agree"] == true);
  CHECK(cc.j()["total_fan_in"] == 9 + 2 * 12);
}

TEST_CASE("gen output feeds every consumer") {
  auto g = cli({"gen", "--graph", "grid:3x3"});
  REQUIRE(g.code == 0);
  const auto path = std::filesystem::temp_directory_path() / "lightsout_cli_gen.json";
  {
    std::ofstream f(path);
    f << g.out;
  }
  const std::string p = path.string();
  CHECK(cli({"solve", "--graph", p, "--to", "ones"}).code == 0);
  CHECK(cli({"invariant", "--graph", p}).code == 0);
  CHECK(cli({"check", "--graph", p}).code == 0);
  CHECK(cli({"special", "--graph", p}).code == 0);
  CHECK(cli({"colored-solve", "--graph", p, "--k", "3", "--to", "zeros"}).code == 0);
  CHECK(cli({"min-solve", "--graph", p, "--to", "ones"}).code == 0);
  CHECK(cli({"circuit-check", "--graph", p}).code == 0);
  CHECK(cli({"solve", "--graph", g.out, "--to", "ones"}).code == 0);
  std::filesystem::remove(path);
}

TEST_CASE("netlist export") {
  const auto path = std::filesystem::temp_directory_path() / "lightsout_cli_netlist.json";
  CHECK(cli({"circuit-check", "--graph", "path:3", "--export-netlist", path.string()}).code == 0);
  std::ifstream f(path);
  CHECK(json::parse(f)["total_fan_in"] == 7);
  std::filesystem::remove(path);
}
