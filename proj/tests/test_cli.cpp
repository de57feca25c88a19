#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "dmt/cli.hpp"

#ifndef DMT_DATA_DIR
#error "DMT_DATA_DIR must point at the sample data"
#endif

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dmt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DMT_DATA_DIR) + "/" + name; }

nlohmann::json run_json(std::vector<std::string> args) {
  auto r = run(std::move(args));
  CHECK(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("documented examples") {
  auto critical = run_json({"critical", "--in", data("p3.scx")});
  CHECK(critical["schema"] == 1);
  CHECK(critical["critical"] == nlohmann::json::parse("[[0],[2],[1,2]]"));
  CHECK(critical["values"] == nlohmann::json::parse("[0,1,4]"));

  auto mp = run_json({"mountain-pass", "--in", data("p3.scx"), "--min1", "2", "--min0", "0"});
  CHECK(mp["c"] == 4);
  CHECK(mp["edge"] == nlohmann::json::parse("[1,2]"));

  auto bad = run({"validate", "--in", data("bad.scx")});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["error"]["kind"] == "MorseConditionViolated");
}

TEST_CASE("every command is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"validate", "--in", data("p3.scx")},
      {"critical", "--in", data("circle.scx")},
      {"gradient", "--in", data("double_well.scx")},
      {"gradient", "--in", data("p3.scx"), "--dot"},
      {"flow", "--in", data("triangle.scx"), "--level", "3"},
      {"levels", "--in", data("circle.scx")},
      {"collapse", "--in", data("triangle.scx")},
      {"collapse", "--in", data("p3.scx"), "--level", "1", "--to", "3"},
      {"collapse", "--in", data("circle.scx"), "--level", "4"},
      {"homology", "--in", data("tetra.off")},
      {"mountain-pass", "--in", data("double_well.scx"), "--min1", "3", "--min0", "0"},
      {"lscat", "--in", data("circle.scx")},
      {"minmax-check", "--in", data("p3.scx"), "--min1", "2", "--min0", "0"},
      {"minmax-check", "--in", data("circle.scx")},
      {"random", "--seed", "11"},
      {"export-dot", "--in", data("double_well.scx")},
  };
  for (const auto& args : commands) {
    auto a = run(args);
    auto b = run(args);
    CAPTURE(args[0]);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("command results") {
  auto flow = run_json({"flow", "--in", data("p3.scx")});
  CHECK(flow["dimensions"][0]["matrix"] == nlohmann::json::parse("[[1,0,0],[1,0,0],[0,0,1]]"));
  CHECK(flow["dimensions"][1]["ok"] == true);

  auto collapse = run_json({"collapse", "--in", data("p3.scx"), "--level", "1", "--to", "3"});
  CHECK(collapse["mode"] == "window");
  CHECK(collapse["steps"] == nlohmann::json::parse("[[[1],[0,1]]]"));

  auto homology = run_json({"homology", "--in", data("p3.scx"), "--level", "3"});
  CHECK(homology["betti"] == nlohmann::json::parse("[2,0]"));

  auto well = run_json({"mountain-pass", "--in", data("double_well.scx"), "--min1", "3", "--min0", "0"});
  CHECK(well["c"] == 6);
  CHECK(well["edge"] == nlohmann::json::parse("[0,2]"));

  auto lscat = run_json({"lscat", "--in", data("triangle.scx")});
  CHECK(lscat["dgcat"] == 0);

  auto random = run_json({"random", "--seed", "5", "--vertices", "4", "--dim", "1"});
  CHECK(random["scx"].get<std::string>().find(" : ") != std::string::npos);
}

TEST_CASE("usage and domain errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"random"}).code == 2);
  CHECK(run({"critical"}).code == 2);
  CHECK(run({"critical", "--in", data("missing.scx")}).code == 2);
  CHECK(run({"mountain-pass", "--in", data("p3.scx")}).code == 2);
  CHECK(run({"--help"}).code == 0);

  auto no_values = run({"critical", "--in", data("tetra.off")});
  CHECK(no_values.code == 1);
  CHECK(nlohmann::json::parse(no_values.out)["error"]["kind"] == "MissingValue");

  auto circle = run({"mountain-pass", "--in", data("circle.scx"), "--min1", "1", "--min0", "0"});
  CHECK(circle.code == 1);
  CHECK(nlohmann::json::parse(circle.out)["error"]["kind"] == "NotLocalMinima");
}
