#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "knotoid/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = knotoid::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_status = 0) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE(r.status == expected_status);
  return nlohmann::json::parse(r.out);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("knotoid_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("height") {
  const auto r = run({"height", fixtures::kink});
  CHECK(r.status == 0);
  CHECK(r.out == "h=0\n");
  CHECK(run({"height", fixtures::clasp}).out == "h=1\n");
  const auto j = run_json({"height", fixtures::clasp});
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "height");
  CHECK(j["input"] == fixtures::clasp);
  CHECK(j["result"]["height"] == 1);
  CHECK(j["result"]["shortcut"]["arcs"].size() == 1);
}

TEST_CASE("stable output omits the version") {
  CHECK(run_json({"height", fixtures::kink}).contains("version"));
  CHECK_FALSE(run_json({"height", fixtures::kink, "--stable"}).contains("version"));
  const auto v = run({"--version"});
  CHECK(v.status == 0);
  CHECK(v.out == std::string("knotoid ") + knotoid::cli::version() + "\n");
}

TEST_CASE("bad input and usage") {
  CHECK(run({"height", "flatknotoid 1+ 2+"}).status == 2);
  CHECK(run({"height", fixtures::trefoil}).status == 2);  // closed
  CHECK(run({"bridge", fixtures::clasp}).status == 2);    // not a knot
  CHECK(run({"affine", fixtures::clasp}).status == 2);    // no passes
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"verify", "--max-n", "12"}).status == 2);
  CHECK(run({"enumerate", "-n", "2", "--shard", "3/3"}).status == 2);
}

TEST_CASE("validate reports invalid codes with status 1") {
  const auto ok = run({"validate", "flatknotoid 2+ 1- 2+ 1-"});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("canonical=flatknotoid 1+ 2- 1+ 2-") != std::string::npos);
  const auto bad = run_json({"validate", "flatknotoid 1+ 2+ 1+ 2+"}, 1);
  CHECK(bad["result"]["valid"] == false);
  CHECK(bad["result"]["error"]["kind"] == "NOT_SPHERICAL");
}

TEST_CASE("bridge verdicts and exit codes") {
  const auto t = run({"bridge", fixtures::trefoil});
  CHECK(t.status == 0);
  CHECK(t.out == "INCONCLUSIVE k=1 cr=3 bridge=OVER start=0 length=1\n");
  const auto j = run_json({"bridge", fixtures::bridge3}, 1);
  CHECK(j["result"]["verdict"] == "NOT_MINIMAL");
  CHECK(j["result"]["k"] == 3);
  CHECK(j["result"]["cr"] == 8);
  CHECK(j["result"]["bridge"]["kind"] == "OVER");
}

TEST_CASE("affine") {
  const auto r = run({"affine", fixtures::clasp_knotoid});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("P=-2 + 1*t^-1 + 1*t^1 d_max=1", 0) == 0);
  const auto j = run_json({"affine", fixtures::clasp_knotoid});
  CHECK(j["result"]["crossings"].size() == 2);
  CHECK(j["result"]["d_max"] == 1);
}

TEST_CASE("gamma with an explicit shortcut") {
  const auto r = run({"gamma", fixtures::non_ended_n8, "--arcs", "4 6 11 9"});
  CHECK(r.status == 0);
  CHECK(r.out.find("chain_lemmas=ok (applicable=1,1,0)") != std::string::npos);
  CHECK(run({"gamma", fixtures::non_ended_n8, "--arcs", "4 x"}).status == 2);
  CHECK(run({"gamma", fixtures::non_ended_n8, "--arcs", "4 6"}).status == 2);
  CHECK(run({"gamma", fixtures::non_ended_n8, "--arcs", "99"}).status == 2);
}

TEST_CASE("prime and decompose") {
  CHECK(run({"prime", fixtures::clasp}).out == "prime\n");
  const auto j = run_json({"prime", fixtures::two_kinks});
  CHECK(j["result"]["prime"] == false);
  CHECK(j["result"].contains("witness"));
  const auto d = run_json({"decompose", fixtures::two_kinks});
  CHECK(d["result"]["pieces"].size() == 2);
}

TEST_CASE("codes from a file, one per line") {
  const auto path = scratch("codes.txt");
  {
    std::ofstream f(path);
    f << fixtures::kink << "\n\n" << fixtures::clasp << "\n";
  }
  const auto r = run({"height", "--file", path.string()});
  CHECK(r.status == 0);
  CHECK(r.out == "h=0\nh=1\n");
}

TEST_CASE("render to a file") {
  const auto path = scratch("clasp.svg");
  fs::remove(path);
  CHECK(run({"render", fixtures::clasp, "--shortcut", "--out", path.string()}).status == 0);
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  CHECK(text.str().find("<svg") != std::string::npos);
  CHECK(text.str() == run({"render", fixtures::clasp, "--shortcut"}).out);
  CHECK(run({"render", fixtures::trefoil, "--shortcut"}).status == 2);
}

TEST_CASE("enumerate and spiral") {
  CHECK(run({"enumerate", "-n", "2", "--count"}).out == "10\n");
  const auto j = run_json({"enumerate", "-n", "1"});
  CHECK(j["result"]["codes"] == nlohmann::json::array({"flatknotoid 1+ 1+", "flatknotoid 1- 1-"}));
  CHECK(run({"spiral", "2"}).out == "flatknotoid 1+ 2+ 3- 4- 1+ 4- 2+ 3-\n");
  CHECK(run_json({"spiral", "3"})["result"]["height"] == 3);
}

TEST_CASE("verify and merge") {
  const auto j = run_json({"verify", "--max-n", "4", "--machinery-max-n", "4", "--stable"});
  CHECK(j["schema"] == 1);
  CHECK(j["result"]["violation_count"] == 0);
  CHECK_FALSE(j["result"].contains("shard"));
  CHECK(j["result"]["theorem"].size() == 5);

  std::vector<std::string> files;
  for (int i = 0; i < 2; ++i) {
    const auto r = run({"verify", "--max-n", "4", "--machinery-max-n", "4", "--shard", std::to_string(i) + "/2",
                        "--json", "--stable"});
    REQUIRE(r.status == 0);
    const auto path = scratch("shard" + std::to_string(i) + ".json");
    std::ofstream(path) << r.out;
    files.push_back(path.string());
  }
  const auto merged = run({"verify", "--merge", files[1], files[0], "--json", "--stable"});
  CHECK(merged.status == 0);
  CHECK(nlohmann::json::parse(merged.out) == j);

  CHECK(run({"verify", "--merge", files[0], "--json"}).status == 2);            // a shard is missing
  CHECK(run({"verify", "--merge", files[0], files[0], "--json"}).status == 2);  // duplicated
  CHECK(run({"verify", "--merge", scratch("nope.json").string()}).status == 2);
}
