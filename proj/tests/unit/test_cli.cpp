#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lpa/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = lpa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(LPA_FIXTURE_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/lpa_cli_test_") + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("check-k") {
  auto r = run({"check-k", "--graph", fixture("r1.g")});
  CHECK(r.code == 0);
  CHECK(r.out == "false: K1 vertices [v]\n");
  r = run({"check-k", "--graph", fixture("l2.g"), "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["condition_k"] == true);
}

TEST_CASE("count2 and enum2") {
  auto r = run({"count2", "--edges", "3", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out == "10 (formula) == 10 (enumeration)\n");
  r = run({"enum2", "--edges", "2", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 6);
  CHECK(j["shapes"].size() == 6);
}

TEST_CASE("classify2") {
  auto r = run({"classify2", "--graph", fixture("g10.g"), "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("{\"class\":\"IV\",", 0) == 0);
  r = run({"classify2", "--graph", fixture("g07.g")});
  CHECK(r.out.find("note:") != std::string::npos);
  r = run({"classify2", "--graph", fixture("g05.g"), "--format", "dot"});
  CHECK(r.out.rfind("digraph", 0) == 0);
  r = run({"classify2", "--graph", fixture("r1.g")});
  CHECK(r.code == 1);
}

TEST_CASE("element commands") {
  auto r = run({"normalize", "--graph", fixture("r2.g"), "e.e*'"});
  CHECK(r.out == "-f.f*' + v\n");
  r = run({"mul", "--graph", fixture("r2.g"), "v + e", "f"});
  CHECK(r.out == "f + e.f\n");
  r = run({"grade", "--graph", fixture("r1.g"), "v + e"});
  CHECK(r.out == "degree 0: v\ndegree 1: e\n");
  r = run({"extract-vertex", "--graph", fixture("r2.g"), "v + e", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["result"] == "v");
  r = run({"extract-vertex", "--graph", fixture("r1.g"), "v + e"});
  CHECK(r.code == 1);
  CHECK(r.err.find("K1") != std::string::npos);
  r = run({"normalize", "--graph", fixture("l2.g"), "a.a"});
  CHECK(r.code == 1);
}

TEST_CASE("graph commands") {
  auto r = run({"closure", "--graph", fixture("y3.g"), "--vertices", "v"});
  CHECK(r.out == "{u, v, w}\n");
  r = run({"classify-vertex", "--graph", fixture("c2.g"), "--vertex", "u"});
  CHECK(r.out == "K1 cycle gh\n");
  r = run({"hs-sets", "--graph", fixture("l2.g")});
  CHECK(r.out == "{}\n{u, v}\n");
  r = run({"graded-lattice", "--graph", fixture("l2.g"), "--format", "dot"});
  CHECK(r.out.find("rankdir=BT") != std::string::npos);
  r = run({"nongraded-witness", "--graph", fixture("g5.g"), "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["vertex"] == "u");
  CHECK(j["generator"] == "u + e");
  CHECK(j["graded"] == false);
  r = run({"nongraded-witness", "--graph", fixture("g04.g")});
  CHECK(r.code == 1);
}

TEST_CASE("ideal commands") {
  auto a = temp_file("a.json", R"({"polys": [{"cycle": ["e"], "coeffs": ["-1", "0", "1"]}]})");
  auto b = temp_file("b.json", R"({"polys": [{"cycle": ["e"], "coeffs": ["1", "1"]}]})");
  auto r = run({"contains", "--graph", fixture("r1.g"), "--ideal", a, "--ideal", b});
  CHECK(r.out == "true\n");
  r = run({"contains", "--graph", fixture("r1.g"), "--ideal", b, "--ideal", a});
  CHECK(r.out == "false\n");
  r = run({"lambda-reduce", "--graph", fixture("y3.g"), "--format", "json", "e + v", "e - v", "f + w"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["vertices"] == nlohmann::json::array({"u", "v", "w"}));
  CHECK(j["polys"].empty());
  r = run({"lambda-reduce", "--graph", fixture("g6.g"), "--ideal", b});
  CHECK(r.out == "vertices: {v}\npoly on e at u: x + 1\nnot graded\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"check-k"}).code == 2);
  CHECK(run({"count2"}).code == 2);
  CHECK(run({"count2", "--edges", "x"}).code == 2);
  CHECK(run({"check-k", "--graph", fixture("r1.g"), "--format", "dot"}).code == 2);
  CHECK(run({"contains", "--graph", fixture("r1.g"), "--ideal", "x"}).code == 2);
  CHECK(run({"check-k", "--graph", "/nonexistent.g"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"classify2", "--graph", fixture("g09.g"), "--format", "json"};
  CHECK(run(args).out == run(args).out);
}
