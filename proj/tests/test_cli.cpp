#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symloop/cli.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = symloop::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("symloop_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("symbol-loop output is a loop") {
  Result r = run({"symbol-loop", "--group", "sl2", "--root", "1,2", "--u", "2", "--v", "3", "--ring", "Q"});
  REQUIRE(r.code == 0);
  Json doc = r.json();
  CHECK(doc["schema"] == "symloop.path/1");
  CHECK(doc["ring"] == "poly:Q:T");

  std::string path = write_temp("loop.json", r.out);
  Result v = run({"verify-loop", "--in", path});
  REQUIRE(v.code == 0);
  CHECK(v.json()["is_loop"] == true);

  Result closed = run({"symbol-loop", "--group", "sl2", "--u", "2", "--v", "3", "--kind", "closed"});
  REQUIRE(closed.code == 0);
  CHECK(closed.json()["entries"] == doc["entries"]);

  Result x = run({"symbol-loop", "--group", "sl3", "--root", "2,3", "--u", "5", "--kind", "x", "--ring", "Fq:7^1"});
  REQUIRE(x.code == 0);
  Result vx = run({"verify-loop", "--in", write_temp("x.json", x.out)});
  CHECK(vx.json()["is_loop"] == false);
  CHECK(vx.json()["is_path"] == true);
}

TEST_CASE("tame and k2m-field") {
  Result t = run({"tame", "--a", "2", "--b", "3", "--p", "3"});
  REQUIRE(t.code == 0);
  CHECK(t.json() == Json::parse(R"({"value": "2"})"));

  Result k = run({"k2m-field", "--q", "2"});
  REQUIRE(k.code == 0);
  CHECK(k.json()["invariant_factors"] == Json::array());
  CHECK(k.json()["free_rank"] == 0);
  CHECK(run({"k2m-field", "--q", "9"}).json()["invariant_factors"] == Json::array());
}

TEST_CASE("exit codes") {
  Result bad_rational = run({"tame", "--a", "x", "--b", "3", "--p", "3"});
  CHECK(bad_rational.code == 1);
  CHECK(bad_rational.json().contains("error"));

  Result zero = run({"tame", "--a", "0", "--b", "3", "--p", "3"});
  CHECK(zero.code == 2);
  CHECK(zero.json()["error"].get<std::string>().find("nonzero") != std::string::npos);

  CHECK(run({"k2m-field", "--q", "6"}).code == 2);
  CHECK(run({"symbol-loop", "--group", "sl2", "--u", "0", "--v", "3"}).code == 2);
  CHECK(run({"symbol-loop", "--group", "sl2", "--root", "1,3", "--u", "2", "--v", "3"}).code == 2);
  CHECK(run({"no-such-command"}).code == 1);
  CHECK(run({"factor", "--in", write_temp("garbage.json", "{not json")}).code == 1);
  CHECK(run({"factor", "--in", "/nonexistent/file.json"}).code == 1);
}

TEST_CASE("factor, lift and k2-check") {
  const std::string m = R"({"schema": "symloop.matrix/1", "n": 2, "ring": "Fq:5^1", "entries": [[[2],[0]],[[0],[3]]]})";
  Result f = run({"factor", "--in", write_temp("diag.json", m)});
  REQUIRE(f.code == 0);
  CHECK(f.json()["schema"] == "symloop.factors/1");

  Result loop = run({"symbol-loop", "--group", "sl3", "--u", "2", "--v", "3"});
  REQUIRE(loop.code == 0);
  Result lift = run({"lift", "--in", write_temp("c.json", loop.out)});
  REQUIRE(lift.code == 0);
  CHECK(lift.json()["is_k2"] == true);

  Result kc = run({"k2-check", "--in", write_temp("word.json", lift.out)});
  REQUIRE(kc.code == 0);
  CHECK(kc.json()["projection_is_identity"] == true);
  CHECK(run({"k2-check", "--in", write_temp("word.json", lift.out), "--tame"}).code == 2);

  const std::string symbols = R"({"schema": "symloop.symbols/1", "symbols": [["2", "3"]]})";
  Result ks = run({"k2-check", "--in", write_temp("sym.json", symbols), "--tame"});
  REQUIRE(ks.code == 0);
  CHECK(ks.json()["projection_is_identity"] == true);
  CHECK(ks.json()["tame_invariants"]["3"] == "2");
}

TEST_CASE("schur") {
  const std::string gens = R"({"n": 2, "ring": "Fq:3^1", "generators": [[[[1],[1]],[[0],[1]]], [[[1],[0]],[[1],[1]]]]})";
  std::string path = write_temp("sl2f3.json", gens);
  Result s = run({"schur", "--gens", path});
  REQUIRE(s.code == 0);
  CHECK(s.json()["order"] == 24);
  CHECK(s.json()["invariant_factors"] == Json::array());
  CHECK_FALSE(s.json().contains("timing"));
  CHECK(run({"schur", "--gens", path, "--timing"}).json().contains("timing"));
  Result over = run({"schur", "--gens", path, "--bound", "10"});
  CHECK(over.code == 2);
  CHECK(over.json()["error"].get<std::string>().find("exceeds bound") != std::string::npos);
}

TEST_CASE("simplicial-face and verify-homotopy") {
  const std::string poly = R"({"schema": "symloop.simplex-poly/1", "level": 1, "ring": "Q", "poly": [[[1], "1"]]})";
  Result d0 = run({"simplicial-face", "--in", write_temp("t.json", poly), "--i", "0"});
  REQUIRE(d0.code == 0);
  CHECK(d0.json()["level"] == 0);
  CHECK(run({"simplicial-face", "--in", write_temp("t.json", poly), "--i", "5"}).code == 2);

  const std::string sigma =
      R"({"schema": "symloop.simplex-matrix/1", "level": 2, "n": 2, "ring": "Q",
          "entries": [["1", [[[1, 1], "1"]]], ["0", "1"]]})";
  const std::string id1 = R"({"schema": "symloop.simplex-matrix/1", "level": 1, "n": 2, "ring": "Q",
          "entries": [["1", "0"], ["0", "1"]]})";
  const std::string loop = R"({"schema": "symloop.simplex-matrix/1", "level": 1, "n": 2, "ring": "Q",
          "entries": [["1", [[[1], "1"], [[2], "-1"]]], ["0", "1"]]})";
  Result h = run({"verify-homotopy", "--sigma", write_temp("sigma.json", sigma), "--from", write_temp("id.json", id1),
                  "--to", write_temp("l.json", loop)});
  REQUIRE(h.code == 0);
  CHECK(h.json()["certified"] == true);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"symbol-loop", "--group", "sl3", "--root", "3,1", "--u", "-2/7", "--v", "5", "--ring", "Q"},
        std::vector<std::string>{"k2m-field", "--q", "8"},
        std::vector<std::string>{"reproduce", "--seed", "7"}}) {
    Result a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("reproduce reports every criterion") {
  Result r = run({"reproduce"});
  REQUIRE(r.code == 0);
  Json doc = r.json();
  CHECK(doc["seed"] == 20261017);
  CHECK(doc["total"] == 9);
  CHECK(doc["passed"] == 9);
  CHECK(doc["criteria"].size() == 9);
}
