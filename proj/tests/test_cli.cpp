#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rskop/cli.hpp"
#include "support.hpp"

using nlohmann::json;
using namespace rskop;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "rskop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

json payload(const Result& r) { return json::parse(r.out)["payload"]; }

}  // namespace

TEST_CASE("apply in both directions") {
  Result r = run({"apply", "0,3,2;1,2,0;2,0,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "P = [[1,1,1,1,1,3,3],[2,2,2],[3,3]]\nQ = [[1,1,1,2,2,3,3],[2,2,2],[3,3]]\n");
  Result inv = run({"apply", "--inverse", "1,1,1,1,1,3,3;2,2,2;3,3", "1,1,1,2,2,3,3;2,2,2;3,3"});
  CHECK(inv.code == 0);
  CHECK(inv.out == "0,3,2;1,2,0;2,0,2\n");
  Result j = run({"--format", "json", "apply", "0,3,2;1,2,0;2,0,2"});
  CHECK(payload(j)["P"] == json::parse("[[1,1,1,1,1,3,3],[2,2,2],[3,3]]"));
  CHECK(json::parse(j.out)["command"] == "apply");
}

TEST_CASE("matrix input from stdin and as JSON") {
  Result r = run({"apply", "-"}, "0,3,2;1,2,0;2,0,2\n");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("P = [[1,1,1,1,1,3,3]", 0) == 0);
  Result j = run({"apply", R"({"rows":2,"cols":2,"entries":["0","1","1","0"]})"});
  CHECK(j.code == 0);
  CHECK(j.out == "P = [[1],[2]]\nQ = [[1],[2]]\n");
}

TEST_CASE("matrix command and its JSON round trip") {
  Result r = run({"--format", "json", "matrix", "21", "111", "--charpoly", "--minpoly", "--diag", "--spectrum"});
  REQUIRE(r.code == 0);
  json p = payload(r);
  IntMatrix m = cli::matrix_from_json(p["matrix"]);
  CHECK(m == oracle::mat({{1, 1, 0}, {0, 0, 1}, {0, -1, -1}}));
  CHECK(cli::poly_from_json(p["charpoly"]) == oracle::expand("(t-1)(t^2+t+1)"));
  CHECK(p["diagonalizable"] == true);
  CHECK(p["spectrum"]["distinct_real_roots"] == 1);
  CHECK(p["basis"].size() == 3);
  Result inv = run({"--format", "json", "matrix", "21", "111", "--inverse"});
  IntMatrix mi = cli::matrix_from_json(payload(inv)["matrix"]);
  CHECK(mi * m == IntMatrix::identity(3));
  Result csv = run({"--format", "csv", "matrix", "11", "11"});
  CHECK(csv.out == "1,1\n0,-1\n");
}

TEST_CASE("text matrix output") {
  Result r = run({"matrix", "11", "11", "--charpoly"});
  CHECK(r.code == 0);
  CHECK(r.out.find("charpoly: t^2 - 1  = (t-1)(t+1)") != std::string::npos);
}

TEST_CASE("scalar commands") {
  CHECK(run({"det", "3", "3", "7"}).out == "-1\n");
  CHECK(run({"det", "2", "3", "3", "--direct"}).out == run({"det", "2", "3", "3"}).out);
  CHECK(run({"trace", "4", "4", "5"}).out == "613\n");
  CHECK(run({"trace", "4", "4", "5", "--inverse"}).out == "24\n");
  CHECK(run({"trace-perm", "7", "--workers", "3"}).out == "-279\n");
  CHECK(run({"cd", "6"}).out == "406\n");
  json j = payload(run({"--format", "json", "trace", "3", "3", "4"}));
  CHECK(j["trace"] == "70");
  CHECK(j["m"] == 3);
  CHECK(run({"--format", "csv", "det", "2", "2", "2"}).out == "m,n,d,det\n2,2,2,-1\n");
}

TEST_CASE("classify and reduce") {
  Result c = run({"classify", "2", "3", "6", "--cross-check"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("diagonalizable, E9\n", 0) == 0);
  CHECK(run({"classify", "2", "3", "7"}).out.rfind("not diagonalizable, none", 0) == 0);
  Result r = run({"reduce", "61", "232"});
  CHECK(r.out == "normalized (61,232)\nreduced (21,111)\ndivisor z11 z12^2 z13\n");
  json j = payload(run({"--format", "json", "reduce", "232", "61"}));
  CHECK(j["transposed"] == true);
  CHECK(j["reduced"]["sigma"] == json::parse("[2,1]"));
}

TEST_CASE("blocks and tables") {
  json b = payload(run({"--format", "json", "blocks", "2", "3", "3"}));
  CHECK(b["n0"] == "26");
  CHECK(b["blocks"].size() == 3);
  Result t = run({"tables", "--which", "det", "--max-m", "3", "--max-d", "5"});
  CHECK(t.code == 0);
  CHECK(t.out.find("-1") != std::string::npos);
  Result rd = run({"--format", "csv", "tables", "--which", "reduced-d3"});
  CHECK(rd.out == "sigma,pi,det,trace,charpoly\n21,111,1,0,\"(t-1)(t^2 + t + 1)\"\n12,111,1,-1,\"(t-1)(t+1)^2\"\n"
                  "111,111,-1,-3,\"(t-1)(t+1)^2(t^3 + 2t^2 + 1)\"\n");
}

TEST_CASE("verify suites") {
  Result r = run({"verify", "--suite", "tableaux"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS tableaux") != std::string::npos);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::invalid_input);
}

TEST_CASE("errors and exit codes") {
  Result bad = run({"apply", "1,2;3"});
  CHECK(bad.code == cli::invalid_input);
  CHECK(bad.err.find("position") != std::string::npos);
  CHECK(run({"apply", "1,x"}).err.find("position 3") != std::string::npos);
  CHECK(run({"matrix", "21", "11"}).code == cli::invalid_input);
  CHECK(run({"apply", "--inverse", "2,1", "1,2"}).code == cli::invalid_input);
  CHECK(run({"nosuch"}).code == cli::invalid_input);
  CHECK(run({}).code == cli::invalid_input);
  Result cap = run({"--max-basis", "10", "matrix", "1111", "1111"});
  CHECK(cap.code == cli::capacity_exceeded);
  Result je = run({"--format", "json", "matrix", "21", "11"});
  json e = json::parse(je.err);
  CHECK(e["error"]["kind"] == "invalid-weight");
  CHECK(run({"trace-perm", "12"}).code == cli::capacity_exceeded);
}

TEST_CASE("literal parsers") {
  CHECK(cli::parse_weight("(3,2,1)") == WeightVector{3, 2, 1});
  CHECK(cli::parse_weight("321") == WeightVector{3, 2, 1});
  CHECK(cli::parse_weight("10,2") == WeightVector{10, 2});
  CHECK_THROWS_AS(cli::parse_weight("3a"), Error);
  CHECK(cli::parse_table("1,0;0,1") == ContingencyTable::from_rows({{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(cli::parse_tableau("2,1"), Error);
  CHECK(cli::factored(oracle::expand("(t-1)^2(t+1)(t^2+1)")) == "(t-1)^2(t+1)(t^2 + 1)");
  CHECK(cli::factored(oracle::expand("(t-1)(t+1)")) == "(t-1)(t+1)");
  CHECK(cli::factored(oracle::expand("t^2+1")) == "(t^2 + 1)");
}
